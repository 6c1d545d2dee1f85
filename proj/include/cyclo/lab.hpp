#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "dihedral.hpp"
#include "forms.hpp"
#include "workspace.hpp"

namespace cyclo {

/** \brief Build-once store shared by concurrent jobs; a key is built by the first caller. */
class Cache {
 public:
  template <class T, class F>
  std::shared_ptr<const T> get(const std::string& key, F&& build) {
    std::promise<std::shared_ptr<const void>> p;
    std::shared_future<std::shared_ptr<const void>> f;
    bool mine = false;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = m_.find(key);
      if (it == m_.end()) {
        f = p.get_future().share();
        m_.emplace(key, f);
        mine = true;
      } else {
        f = it->second;
      }
    }
    if (mine) {
      try {
        p.set_value(std::make_shared<const T>(build()));
      } catch (...) {
        p.set_exception(std::current_exception());
      }
    }
    return std::static_pointer_cast<const T>(f.get());
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_future<std::shared_ptr<const void>>> m_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/** \brief Cached constructions keyed by algebra name and truncation degree. */
class Lab {
 public:
  explicit Lab(Caps caps) : caps_(caps) {}

  const Caps& caps() const { return caps_; }
  std::size_t cap() const { return caps_.max_dim; }

  std::shared_ptr<const CyclicModule> cyclic(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<CyclicModule>(key("cyclic", a, N), [&] { return CyclicModule(a, N, cap()); });
  }

  std::shared_ptr<const CyclicBicomplex> bicomplex(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<CyclicBicomplex>(key("cc", a, N), [&] { return cyclic_bicomplex(*cyclic(a, N)); });
  }

  std::shared_ptr<const SBIData> sbi(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<SBIData>(key("sbi", a, N),
                               [&] { return sbi_data(*cyclic(a, N), *bicomplex(a, N), certified_total(N)); });
  }

  std::shared_ptr<const ChainComplex> hochschild(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<ChainComplex>(key("hoch", a, N), [&] { return cyclic(a, N)->hochschild(); });
  }

  std::shared_ptr<const std::vector<Subquotient>> hh(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<std::vector<Subquotient>>(key("hh", a, N),
                                                [&] { return hochschild(a, N)->homology_upto(certified_single(N)); });
  }

  std::shared_ptr<const NormalizedMixed> normalized(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<NormalizedMixed>(key("norm", a, N), [&] { return normalized_mixed(*cyclic(a, N)); });
  }

  std::shared_ptr<const ChainComplex> normalized_tot(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<ChainComplex>(key("normtot", a, N), [&] { return normalized(a, N)->mixed.tot(); });
  }

  std::shared_ptr<const QuotientComplex> ctilde(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<QuotientComplex>(key("ctilde", a, N), [&] { return cyclo::ctilde(*cyclic(a, N)); });
  }

  std::shared_ptr<const Eulerian> eulerian(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<Eulerian>(key("euler", a, N), [&] {
      require_commutative(*a);
      return eulerian_idempotents(a->dim, N);
    });
  }

  std::shared_ptr<const Forms> forms(const AlgebraPtr& a, std::size_t top) {
    return cache_.get<Forms>(key("forms", a, top), [&] { return omega_forms(a, top); });
  }

  std::shared_ptr<const LieComplexE> lie_E(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<LieComplexE>(key("E", a, N), [&] {
      for (std::size_t n = 0; n <= N; ++n)
        if (a->dim * binomial(a->dim, n) > cap())
          throw TruncationTooLarge("E_" + std::to_string(n) + "(" + a->name + ")", a->dim * binomial(a->dim, n), cap());
      return lie_complex_E(a, N);
    });
  }

  AlgebraPtr matrix(const AlgebraPtr& a, std::size_t r) {
    if (r == 1) return a;
    return cache_.get<Algebra>(key("mat", a, r), [&] { return matrix_algebra(*a, r); });
  }

  std::shared_ptr<const LieAlgebra> gl(const AlgebraPtr& a, std::size_t r) {
    return cache_.get<LieAlgebra>(key("gl", a, r), [&] { return gl_lie(*a, r); });
  }

  std::shared_ptr<const CEComplex> ce(const AlgebraPtr& a, std::size_t r, std::size_t N) {
    return cache_.get<CEComplex>(key("ce" + std::to_string(r), a, N), [&] { return ce_complex(gl(a, r), N, cap()); });
  }

  std::shared_ptr<const CLComplex> cl(const AlgebraPtr& a, std::size_t r, std::size_t N) {
    return cache_.get<CLComplex>(key("cl" + std::to_string(r), a, N), [&] { return cl_complex(gl(a, r), N, cap()); });
  }

  std::shared_ptr<const CoinvariantComplex> ce_bar(const AlgebraPtr& a, std::size_t r, std::size_t N) {
    return cache_.get<CoinvariantComplex>(key("ceb" + std::to_string(r), a, N),
                                          [&] { return ce_coinvariants(*ce(a, r, N), *a, r); });
  }

  std::shared_ptr<const CoinvariantComplex> cl_bar(const AlgebraPtr& a, std::size_t r, std::size_t N) {
    return cache_.get<CoinvariantComplex>(key("clb" + std::to_string(r), a, N),
                                          [&] { return cl_coinvariants(*cl(a, r, N), *a, r); });
  }

  std::shared_ptr<const DihedralComplex> dihedral(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<DihedralComplex>(key("dih", a, N), [&] { return dihedral_complex(*cyclic(a, N)); });
  }

  std::shared_ptr<const VComplex> vcomplex(const AlgebraPtr& a, std::size_t N) {
    return cache_.get<VComplex>(key("V", a, N), [&] { return v_complex(*cyclic(a, N), cap()); });
  }

  /** kind "sk" gives sk_r, kind "sp" gives sp_{2r}. */
  std::shared_ptr<const LieSubalgebra> classical(const std::string& kind, const AlgebraPtr& a, std::size_t r) {
    return cache_.get<LieSubalgebra>(key(kind, a, r), [&] { return kind == "sk" ? sk_algebra(*a, r) : sp_algebra(*a, r); });
  }

  std::shared_ptr<const CEComplex> ce_classical(const std::string& kind, const AlgebraPtr& a, std::size_t r, std::size_t N) {
    return cache_.get<CEComplex>(key("ce" + kind + std::to_string(r), a, N),
                                 [&] { return ce_complex(classical(kind, a, r)->g, N, cap()); });
  }

  /** Largest n <= want with base^{n+1} within the cap (base^{n+1} is the size of C_n). */
  std::size_t fit_tensor(std::size_t base, std::size_t want) const {
    std::size_t n = 0;
    while (n < want && ipow(base, n + 2) <= cap()) ++n;
    return n;
  }

 private:
  static std::string key(const std::string& kind, const AlgebraPtr& a, std::size_t n) {
    return kind + "|" + a->name + "|" + std::to_string(n);
  }

  Caps caps_;
  Cache cache_;
};

}  // namespace cyclo
