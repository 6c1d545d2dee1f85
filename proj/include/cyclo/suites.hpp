#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elementwise.hpp"
#include "lab.hpp"
#include "report.hpp"

namespace cyclo {

inline std::string deg(std::size_t n) { return "n=" + std::to_string(n); }
inline std::string deg(std::size_t p, std::size_t q) { return "p=" + std::to_string(p) + ",q=" + std::to_string(q); }
inline std::string deg_range(std::size_t lo, std::size_t hi) {
  return lo == hi ? deg(lo) : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::string x_subject(const Measuring& m, Index x) { return m.name + "[" + m.C().labels[x] + "]"; }

template <class T>
const T& unit_pick(const std::vector<T>& by_basis, const SparseVec& v) {
  if (v.size() != 1 || v.front().second != 1) throw Error("expected a basis vector");
  return by_basis[v.front().first];
}

/** Coefficients-free rank identity rank(a) + rank(b) == dim, as one check. */
inline void expect_exact(Recorder& rec, const std::string& check, const std::string& dg, std::size_t ra, std::size_t rb,
                         std::size_t dim) {
  rec.expect(check, dg, ra + rb == dim,
             "ranks " + std::to_string(ra) + " + " + std::to_string(rb) + " != dim " + std::to_string(dim));
}

/** First column of m outside the column span of basis, or -1. */
inline long outside_span(const Matrix& basis, const Matrix& m) {
  ColumnSolver s(basis);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!s.solve(m.col(j))) return static_cast<long>(j);
  return -1;
}

inline void expect_iso(Recorder& rec, const std::string& check, const std::string& dg, const Matrix& m) {
  std::size_t r = rank(m);
  rec.expect(check, dg, m.rows() == m.cols() && r == m.rows(),
             "rank " + std::to_string(r) + " on " + std::to_string(m.cols()) + " -> " + std::to_string(m.rows()));
}

inline void expect_chain_map(Recorder& rec, const std::string& check, const ChainMap& f, const ChainComplex& src,
                             const ChainComplex& dst) {
  long bad = chain_map_defect(f, src, dst);
  rec.expect(check, deg_range(1, std::min(src.top(), dst.top())), bad < 0,
             bad < 0 ? "" : "fails at " + deg(static_cast<std::size_t>(bad)));
}

inline void expect_square_zero(Recorder& rec, const std::string& check, const ChainComplex& c) {
  long bad = c.square_defect();
  rec.expect(check, deg_range(0, c.top()), bad < 0, bad < 0 ? "" : "d^2 != 0 at " + deg(static_cast<std::size_t>(bad)));
}

inline Matrix truncate_top(const Matrix& m, std::size_t rows) { return m.rows() == rows ? m : Matrix(rows, m.cols()); }

/** Mixed complex cut down to degrees <= F. */
inline MixedComplex truncate(const MixedComplex& mc, std::size_t F) {
  MixedComplex out;
  for (std::size_t n = 0; n <= F; ++n) out.hoch.push(mc.hoch.dims[n], mc.hoch.d[n]);
  out.B.assign(mc.B.begin(), mc.B.begin() + static_cast<long>(F));
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic engine

inline void cyclic_identities(Recorder& rec, const CyclicModule& cm) {
  const std::size_t N = cm.top();
  std::vector<std::vector<Matrix>> d(N + 1), s(N + 1);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = 0; i <= n; ++i) d[n].push_back(cm.face(n, i));
  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j) s[n].push_back(cm.degeneracy(n, j));
  auto sgn = [](std::size_t k) { return Rational(k % 2 ? -1 : 1); };
  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        rec.equal("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" + std::to_string(i),
                  deg(n), d[n - 1][i] * d[n][j], d[n - 1][j - 1] * d[n][i]);
  for (std::size_t n = 0; n + 1 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        std::string c = "d" + std::to_string(i) + "s" + std::to_string(j);
        Matrix lhs = d[n + 1][i] * s[n][j];
        if (i == j || i == j + 1)
          rec.equal(c + " = id", deg(n), lhs, Matrix::identity(cm.dim(n)));
        else if (i < j)
          rec.equal(c + " = s" + std::to_string(j - 1) + "d" + std::to_string(i), deg(n), lhs, s[n - 1][j - 1] * d[n][i]);
        else
          rec.equal(c + " = s" + std::to_string(j) + "d" + std::to_string(i - 1), deg(n), lhs, s[n - 1][j] * d[n][i - 1]);
      }
  for (std::size_t n = 0; n + 2 <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        rec.equal("s" + std::to_string(i) + "s" + std::to_string(j) + " = s" + std::to_string(j + 1) + "s" + std::to_string(i),
                  deg(n), s[n + 1][i] * s[n][j], s[n + 1][j + 1] * s[n][i]);
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix p = Matrix::identity(cm.dim(n));
    for (std::size_t k = 0; k <= n; ++k) p = cm.t(n) * p;
    rec.equal("t^{n+1} = id", deg(n), p, Matrix::identity(cm.dim(n)));
    if (n >= 1) {
      rec.equal("d0 t = (-1)^n dn", deg(n), d[n][0] * cm.t(n), d[n][n] * sgn(n));
      for (std::size_t i = 1; i <= n; ++i)
        rec.equal("d" + std::to_string(i) + " t = -t d" + std::to_string(i - 1), deg(n), d[n][i] * cm.t(n),
                  cm.t(n - 1) * d[n][i - 1] * Rational(-1));
    }
    if (n + 1 <= N) {
      rec.equal("s0 t = (-1)^n t^2 sn", deg(n), s[n][0] * cm.t(n), cm.t(n + 1) * cm.t(n + 1) * s[n][n] * sgn(n));
      for (std::size_t i = 1; i <= n; ++i)
        rec.equal("s" + std::to_string(i) + " t = -t s" + std::to_string(i - 1), deg(n), s[n][i] * cm.t(n),
                  cm.t(n + 1) * s[n][i - 1] * Rational(-1));
    }
  }
  expect_square_zero(rec, "b^2 = 0", cm.hochschild());
  for (std::size_t n = 2; n <= N; ++n) rec.zero("b'^2 = 0", deg(n), cm.bprime(n - 1) * cm.bprime(n));
  for (std::size_t n = 0; n + 1 < N; ++n) rec.zero("B^2 = 0", deg(n), cm.connes_B(n + 1) * cm.connes_B(n));
  for (std::size_t n = 1; n < N; ++n)
    rec.zero("bB + Bb = 0", deg(n), cm.b(n + 1) * cm.connes_B(n) + cm.connes_B(n - 1) * cm.b(n));
  rec.zero("bB + Bb = 0", deg(0), cm.b(1) * cm.connes_B(0));
}

/** C^Phi(x) against faces, degeneracies and t. */
inline void simplicial_map_checks(Recorder& rec, const CyclicModule& ca, const CyclicModule& cb, const ChainMap& f) {
  const std::size_t N = ca.top();
  for (std::size_t n = 0; n <= N; ++n) {
    bool ok = true;
    std::string w;
    auto note = [&](bool good, const std::string& what) {
      if (!good && ok) {
        ok = false;
        w = what;
      }
    };
    for (std::size_t i = 0; n >= 1 && i <= n; ++i)
      note(f[n - 1] * ca.face(n, i) == cb.face(n, i) * f[n], "face d" + std::to_string(i));
    for (std::size_t j = 0; n + 1 <= N && j <= n; ++j)
      note(f[n + 1] * ca.degeneracy(n, j) == cb.degeneracy(n, j) * f[n], "degeneracy s" + std::to_string(j));
    note(f[n] * ca.t(n) == cb.t(n) * f[n], "cyclic operator t");
    rec.expect("commutes with faces, degeneracies, t", deg(n), ok, w + " does not commute");
  }
}

inline void sbi_exactness(Recorder& rec, const SBIData& s, const std::string& side) {
  const std::size_t M = s.hc.size() - 1;
  for (std::size_t n = 2; n <= M; ++n) {
    rec.zero(side + " S I = 0", deg(n), s.S[n] * s.I[n]);
    rec.zero(side + " B S = 0", deg(n), s.B[n] * s.S[n]);
    rec.zero(side + " I B = 0", deg(n), s.I[n - 1] * s.B[n]);
    expect_exact(rec, side + " exact at HC_n", deg(n), rank(s.I[n]), rank(s.S[n]), s.hc[n].dim());
    expect_exact(rec, side + " exact at HC_{n-2}", deg(n), rank(s.S[n]), rank(s.B[n]), s.hc[n - 2].dim());
    expect_exact(rec, side + " exact at HH_{n-1}", deg(n), rank(s.B[n]), rank(s.I[n - 1]), s.hh[n - 1].dim());
  }
}

inline void suite_sbi_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop2.2", "periodicity ladder", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto cm = lab.cyclic(a, N);
  cyclic_identities(rec, *cm);
  expect_square_zero(rec, "Tot d^2 = 0", lab.bicomplex(a, N)->tot);
  sbi_exactness(rec, *lab.sbi(a, N), "row");
}

inline void suite_sbi(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto ca = lab.cyclic(m.source, N), cb = lab.cyclic(m.target, N);
  auto ba = lab.bicomplex(m.source, N), bb = lab.bicomplex(m.target, N);
  auto sa = lab.sbi(m.source, N), sb = lab.sbi(m.target, N);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop2.2", "periodicity ladder", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), N);
    simplicial_map_checks(rec, *ca, *cb, f);
    ChainMap tot = ba->tot_map(f, *bb);
    expect_chain_map(rec, "Tot map is a chain map", tot, ba->tot, bb->tot);
    std::vector<Matrix> hh, hc;
    for (std::size_t n = 0; n <= M; ++n) {
      hh.push_back(induced_on_subquotient(f[n], sa->hh[n], sb->hh[n]));
      hc.push_back(induced_on_subquotient(tot[n], sa->hc[n], sb->hc[n]));
      rec.equal("I square", deg(n), sb->I[n] * hh[n], hc[n] * sa->I[n]);
    }
    for (std::size_t n = 2; n <= M; ++n) {
      rec.equal("S square", deg(n), sb->S[n] * hc[n], hc[n - 2] * sa->S[n]);
      rec.equal("B square", deg(n), sb->B[n] * hc[n - 2], hh[n - 1] * sa->B[n]);
    }
    if (M < N) rec.skip("ladder squares", deg_range(M + 1, N), "bicomplex built to " + deg(N) + " certifies HC through " + deg(M));
  }
}

// ---------------------------------------------------------------------------
// Antisymmetrization and forms

inline void suite_antisym_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop2.4", "antisymmetrization squares", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto E = lab.lie_E(a, N);
  auto cm = lab.cyclic(a, N);
  expect_square_zero(rec, "delta^2 = 0", E->cc);
  ChainComplex hoch = cm->hochschild();
  expect_chain_map(rec, "eps : E -> C is a chain map", E->eps, E->cc, hoch);
  for (std::size_t n = 0; n <= N; ++n) rec.equal("proj o eps = n! id", deg(n), E->proj[n] * E->eps[n],
                                                 Matrix::identity(E->cc.dims[n]) * Rational([&] {
                                                   mpz_class f = 1;
                                                   for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
                                                   return f;
                                                 }()));
}

inline void suite_antisym(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto Ea = lab.lie_E(m.source, N), Eb = lab.lie_E(m.target, N);
  auto ha = lab.hh(m.source, N), hb = lab.hh(m.target, N);
  auto ea = Ea->cc.homology_upto(certified_single(N)), eb = Eb->cc.homology_upto(certified_single(N));
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop2.4", "antisymmetrization squares", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), N);
    ChainMap e = Ea->map(f, *Eb);
    expect_chain_map(rec, "E^Phi is a chain map", e, Ea->cc, Eb->cc);
    for (std::size_t n = 0; n <= N; ++n) rec.equal("eps square", deg(n), f[n] * Ea->eps[n], Eb->eps[n] * e[n]);
    for (std::size_t n = 0; n <= certified_single(N); ++n) {
      Matrix he = induced_on_subquotient(e[n], ea[n], eb[n]);
      Matrix hf = induced_on_subquotient(f[n], (*ha)[n], (*hb)[n]);
      rec.equal("eps square on homology", deg(n), hf * induced_on_subquotient(Ea->eps[n], ea[n], (*ha)[n]),
                induced_on_subquotient(Eb->eps[n], eb[n], (*hb)[n]) * he);
    }
  }
}

/** Omega^p with the zero differential as a subquotient of itself. */
inline Subquotient whole(std::size_t dim) { return Subquotient(Matrix(0, dim), Matrix(dim, 0)); }

inline void suite_eps_pi_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop2.5", "eps/pi squares", a->name);
  const std::size_t P = lab.caps().form_degree;
  auto f = lab.forms(a, P);
  auto cm = lab.cyclic(a, P + 1);
  const Kahler& k = f->k;
  bool leibniz = true;
  std::string w;
  for (Index i = 0; i < a->dim && leibniz; ++i)
    for (Index j = 0; j < a->dim && leibniz; ++j) {
      SparseVec lhs = k.d.apply(a->mult[i][j]);
      SparseVec rhs = axpy(k.act[i].apply(k.d.col(j)), Rational(1), k.act[j].apply(k.d.col(i)));
      if (lhs != rhs) {
        leibniz = false;
        w = "d(" + a->labels[i] + a->labels[j] + ")";
      }
    }
  rec.expect("Leibniz rule for d : A -> Omega^1", "p=1", leibniz, w);
  mpz_class fact = 1;
  for (std::size_t p = 0; p <= P; ++p) {
    if (p > 1) fact *= static_cast<unsigned long>(p);
    rec.equal("pi eps = p! id", "p=" + std::to_string(p), f->pi[p] * f->eps[p], Matrix::identity(f->dim(p)) * Rational(fact));
    if (p >= 1) rec.zero("b eps = 0", "p=" + std::to_string(p), cm->b(p) * f->eps[p]);
    rec.zero("pi b = 0", "p=" + std::to_string(p), f->pi[p] * cm->b(p + 1));
  }
  for (std::size_t p = 0; p + 1 < P; ++p) rec.zero("d^2 = 0", "p=" + std::to_string(p), f->d[p + 1] * f->d[p]);
}

inline void suite_eps_pi(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t P = lab.caps().form_degree;
  auto fa = lab.forms(m.source, P), fb = lab.forms(m.target, P);
  auto ha = lab.hh(m.source, P + 1), hb = lab.hh(m.target, P + 1);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop2.5", "eps/pi squares", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), P);
    std::vector<Matrix> om;
    for (std::size_t p = 0; p <= P; ++p) {
      std::string dg = "p=" + std::to_string(p);
      om.push_back(measuring_on_omega(*fa, *fb, f[p], p));
      rec.equal("pi square", dg, om[p] * fa->pi[p], fb->pi[p] * f[p]);
      long bad = outside_span((*hb)[p].boundaries(), f[p] * fa->eps[p] - fb->eps[p] * om[p]);
      rec.expect("eps square modulo boundaries", dg, bad < 0, "column " + std::to_string(bad) + " is not a boundary");
      Matrix hf = induced_on_subquotient(f[p], (*ha)[p], (*hb)[p]);
      Subquotient wa = whole(fa->dim(p)), wb = whole(fb->dim(p));
      rec.equal("pi square on homology", dg, om[p] * induced_on_subquotient(fa->pi[p], (*ha)[p], wa),
                induced_on_subquotient(fb->pi[p], (*hb)[p], wb) * hf);
      rec.equal("eps square on homology", dg, hf * induced_on_subquotient(fa->eps[p], wa, (*ha)[p]),
                induced_on_subquotient(fb->eps[p], wb, (*hb)[p]) * om[p]);
    }
    for (std::size_t p = 0; p < P; ++p)
      rec.equal("commutes with de Rham d", "p=" + std::to_string(p), om[p + 1] * fa->d[p], fb->d[p] * om[p]);
  }
}

inline void suite_pibar_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop2.6", "pi-bar square", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto f = lab.forms(a, N);
  auto nm = lab.normalized(a, N);
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix pb = pibar(*f, *nm, n);
    if (n >= 1) rec.zero("pi-bar b = 0", deg(n), pibar(*f, *nm, n - 1) * nm->mixed.hoch.d[n]);
    if (n < N) rec.equal("pi-bar B = d pi-bar", deg(n), pibar(*f, *nm, n + 1) * nm->mixed.B[n], f->d[n] * pb);
    rec.equal("pi kills degenerate chains", deg(n), f->pi[n] * nm->L[n] * nm->P[n], f->pi[n]);
  }
}

inline ChainMap pibar_family(const Forms& f, const NormalizedMixed& nm, std::size_t F) {
  ChainMap out;
  for (std::size_t n = 0; n <= F; ++n) out.push_back(pibar(f, nm, n));
  return out;
}

inline void suite_pibar(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto fa = lab.forms(m.source, N), fb = lab.forms(m.target, N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  MixedComplex oa = forms_mixed(*fa), ob = forms_mixed(*fb);
  ChainComplex ta = na->mixed.tot(), tb = nb->mixed.tot(), toa = oa.tot(), tob = ob.tot();
  ChainMap pa = na->mixed.tot_map(pibar_family(*fa, *na, N), oa), pb = nb->mixed.tot_map(pibar_family(*fb, *nb, N), ob);
  auto hca = ta.homology_upto(M), hcb = tb.homology_upto(M), hoa = toa.homology_upto(M), hob = tob.homology_upto(M);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop2.6", "pi-bar square", x_subject(m, x));
    ChainMap f = normalized_map(hochschild_map(m, unit_vec(x), N), *na, *nb);
    ChainMap om;
    for (std::size_t n = 0; n <= N; ++n) {
      om.push_back(measuring_on_omega(*fa, *fb, hochschild_map(m, unit_vec(x), N)[n], n));
      rec.equal("pi-bar square", deg(n), om[n] * pibar(*fa, *na, n), pibar(*fb, *nb, n) * f[n]);
    }
    ChainMap tf = na->mixed.tot_map(f, nb->mixed), to = oa.tot_map(om, ob);
    expect_chain_map(rec, "Tot pi-bar is a chain map", pa, ta, toa);
    for (std::size_t n = 0; n <= M; ++n)
      rec.equal("pi-bar square on HC", deg(n),
                induced_on_subquotient(to[n], hoa[n], hob[n]) * induced_on_subquotient(pa[n], hca[n], hoa[n]),
                induced_on_subquotient(pb[n], hcb[n], hob[n]) * induced_on_subquotient(tf[n], hca[n], hcb[n]));
    if (M < N) rec.skip("pi-bar square on HC", deg_range(M + 1, N), "Tot built to " + deg(N) + " certifies through " + deg(M));
  }
}

// ---------------------------------------------------------------------------
// Normalized mixed complex, star product, module action

inline void suite_routes_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop3.1", "normalized mixed complex", a->name);
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto cm = lab.cyclic(a, N);
  auto nm = lab.normalized(a, N);
  auto cb = lab.bicomplex(a, N);
  auto ct = lab.ctilde(a, N);
  const MixedComplex& mc = nm->mixed;
  expect_square_zero(rec, "b-bar^2 = 0", mc.hoch);
  for (std::size_t n = 0; n + 1 < N; ++n) rec.zero("B-bar^2 = 0", deg(n), mc.B[n + 1] * mc.B[n]);
  for (std::size_t n = 0; n < N; ++n)
    rec.zero("b-bar B-bar + B-bar b-bar = 0", deg(n),
             mc.hoch.d[n + 1] * mc.B[n] + (n == 0 ? Matrix(mc.hoch.dims[n], mc.hoch.dims[n]) : mc.B[n - 1] * mc.hoch.d[n]));
  ChainComplex tbar = mc.tot();
  MixedComplex full = cm->mixed();
  ChainComplex tfull = full.tot();
  expect_square_zero(rec, "Tot(BC-bar) d^2 = 0", tbar);
  ChainMap toNorm = full.tot_map(nm->P, mc), toTilde, fromCC;
  for (std::size_t n = 0; n <= N; ++n) {
    auto off = full.tot_offsets(n);
    toTilde.push_back(assemble(ct->q[n].dim(), off.back(), {{0, 0, ct->q[n].projection()}}));
    fromCC.push_back(assemble(ct->q[n].dim(), cb->off[n].back(), {{0, 0, ct->q[n].projection()}}));
  }
  expect_chain_map(rec, "Tot(BC) -> Tot(BC-bar) is a chain map", toNorm, tfull, tbar);
  expect_chain_map(rec, "Tot(BC) -> C-tilde is a chain map", toTilde, tfull, ct->cc);
  expect_chain_map(rec, "Tot(CC) -> C-tilde is a chain map", fromCC, cb->tot, ct->cc);
  for (std::size_t n = 0; n <= M; ++n) {
    Subquotient hf = tfull.homology(n), hb = tbar.homology(n), hc = cb->tot.homology(n), ht = ct->cc.homology(n);
    rec.expect("HC dims agree: Tot(CC), Tot(BC-bar), C-tilde", deg(n), hc.dim() == hb.dim() && hb.dim() == ht.dim(),
               std::to_string(hc.dim()) + ", " + std::to_string(hb.dim()) + ", " + std::to_string(ht.dim()));
    expect_iso(rec, "Tot(BC) -> Tot(BC-bar) iso on homology", deg(n), induced_on_subquotient(toNorm[n], hf, hb));
    expect_iso(rec, "Tot(BC) -> C-tilde iso on homology", deg(n), induced_on_subquotient(toTilde[n], hf, ht));
    expect_iso(rec, "Tot(CC) -> C-tilde iso on homology", deg(n), induced_on_subquotient(fromCC[n], hc, ht));
  }
  if (M < N) rec.skip("three-route agreement", deg_range(M + 1, N), "certified through " + deg(M));
}

inline void suite_routes(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  auto ta = lab.normalized_tot(m.source, N), tb = lab.normalized_tot(m.target, N);
  auto cta = lab.ctilde(m.source, N), ctb = lab.ctilde(m.target, N);
  auto hta = ta->homology_upto(M), htb = tb->homology_upto(M);
  auto hca = cta->cc.homology_upto(M), hcb = ctb->cc.homology_upto(M);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop3.1", "normalized mixed complex", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), N);
    for (std::size_t n = 0; n <= N; ++n)
      rec.equal("preserves degenerate chains", deg(n), nb->P[n] * f[n], nb->P[n] * f[n] * na->L[n] * na->P[n]);
    ChainMap fb = normalized_map(f, *na, *nb);
    for (std::size_t n = 0; n < N; ++n)
      rec.equal("commutes with B-bar", deg(n), fb[n + 1] * na->mixed.B[n], nb->mixed.B[n] * fb[n]);
    ChainMap tot = na->mixed.tot_map(fb, nb->mixed);
    expect_chain_map(rec, "Tot(BC-bar) map is a chain map", tot, *ta, *tb);
    ChainMap tilde = cta->map(f, *ctb, "C-tilde map");
    expect_chain_map(rec, "C-tilde map is a chain map", tilde, cta->cc, ctb->cc);
    for (std::size_t n = 0; n <= M; ++n) {
      std::size_t ra = rank(induced_on_subquotient(tot[n], hta[n], htb[n]));
      std::size_t rb = rank(induced_on_subquotient(tilde[n], hca[n], hcb[n]));
      rec.expect("HC^Phi ranks agree across routes", deg(n), ra == rb, std::to_string(ra) + " vs " + std::to_string(rb));
    }
  }
}

/** Per-basis-element maps of a measuring on the normalized complexes and their totals. */
struct NormalizedMaps {
  std::vector<ChainMap> bar, tot;
};

inline NormalizedMaps normalized_maps(const Measuring& m, const NormalizedMixed& na, const NormalizedMixed& nb, std::size_t N) {
  NormalizedMaps out;
  for (Index y = 0; y < m.C().dim; ++y) {
    out.bar.push_back(normalized_map(hochschild_map(m, unit_vec(y), N), na, nb));
    out.tot.push_back(na.mixed.tot_map(out.bar.back(), nb.mixed));
  }
  return out;
}

inline void suite_star(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto ca = lab.cyclic(m.source, N), cb = lab.cyclic(m.target, N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  NormalizedProducts pa{ca.get(), na.get()}, pb{cb.get(), nb.get()};
  NormalizedMaps maps = normalized_maps(m, *na, *nb, N);
  std::vector<ChainMap> raw;
  for (Index y = 0; y < m.C().dim; ++y) raw.push_back(hochschild_map(m, unit_vec(y), N));
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "thm3.2", "star product measuring", x_subject(m, x));
    for (std::size_t p = 0; p <= N; ++p)
      for (std::size_t q = 0; p + q <= N; ++q) {
        Matrix lhs = raw[x][p + q] * shuffle_product(*m.source, p, q);
        Matrix rhs = shuffle_product(*m.target, p, q) *
                     sweedler_pair(m, unit_vec(x), [&](const SparseVec& v) { return unit_pick(raw, v)[p]; },
                                   [&](const SparseVec& v) { return unit_pick(raw, v)[q]; });
        rec.equal("shuffle product measuring", deg(p, q), lhs, rhs);
      }
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; p + q + 1 <= N; ++q) {
        Matrix lhs = maps.tot[x][p + q + 1] * pa.star(p, q);
        Matrix rhs = pb.star(p, q) * sweedler_pair(m, unit_vec(x), [&](const SparseVec& v) { return unit_pick(maps.tot, v)[p]; },
                                                   [&](const SparseVec& v) { return unit_pick(maps.tot, v)[q]; });
        rec.equal("star product measuring", deg(p, q), lhs, rhs);
      }
  }
}

inline void suite_star_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "thm3.2", "star product measuring", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto cm = lab.cyclic(a, N);
  auto nm = lab.normalized(a, N);
  NormalizedProducts pr{cm.get(), nm.get()};
  const std::size_t d = a->dim;
  for (std::size_t p = 0; p <= N; ++p)
    for (std::size_t q = 0; p + q <= N; ++q) {
      // graded commutativity: u x v = (-1)^{pq} v x u
      Matrix swap = Matrix::build(ipow(d, p + 1) * ipow(d, q + 1), ipow(d, q + 1) * ipow(d, p + 1), [&](std::size_t c, Accumulator& acc) {
        std::size_t v = c / ipow(d, p + 1), u = c % ipow(d, p + 1);
        acc.add(static_cast<Index>(u * ipow(d, q + 1) + v), Rational(1));
      });
      rec.equal("shuffle is graded commutative", deg(p, q), shuffle_product(*a, q, p),
                shuffle_product(*a, p, q) * swap * Rational((p * q) % 2 ? -1 : 1));
      if (p + q >= 1 && p + q <= N)
        rec.equal("b is a derivation of the shuffle product", deg(p, q), cm->b(p + q) * shuffle_product(*a, p, q),
                  (p >= 1 ? shuffle_product(*a, p - 1, q) * kron(cm->b(p), Matrix::identity(ipow(d, q + 1)))
                          : Matrix(ipow(d, p + q), ipow(d, p + 1) * ipow(d, q + 1))) +
                      (q >= 1 ? shuffle_product(*a, p, q - 1) * kron(Matrix::identity(ipow(d, p + 1)), cm->b(q)) *
                                    Rational(p % 2 ? -1 : 1)
                              : Matrix(ipow(d, p + q), ipow(d, p + 1) * ipow(d, q + 1))));
    }
  (void)pr;
}

inline void suite_comodule(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto ca = lab.cyclic(m.source, N), cb = lab.cyclic(m.target, N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  NormalizedProducts pa{ca.get(), na.get()}, pb{cb.get(), nb.get()};
  NormalizedMaps maps = normalized_maps(m, *na, *nb, N);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop3.4", "comodule measuring", x_subject(m, x));
    for (std::size_t p = 1; p <= N; ++p)
      for (std::size_t q = 0; p + q <= N; ++q) {
        Matrix lhs = maps.bar[x][p + q] * pa.action(p, q);
        Matrix rhs = pb.action(p, q) * sweedler_pair(m, unit_vec(x), [&](const SparseVec& v) { return unit_pick(maps.tot, v)[p - 1]; },
                                                     [&](const SparseVec& v) { return unit_pick(maps.bar, v)[q]; });
        rec.equal("module action measuring", deg(p - 1, q), lhs, rhs);
      }
    for (std::size_t p = 0; p < N; ++p)
      rec.equal("B : Tot -> C-bar intertwines", deg(p), maps.bar[x][p + 1] * pa.top_B(p), pb.top_B(p) * maps.tot[x][p]);
  }
}

// ---------------------------------------------------------------------------
// Eulerian idempotents and the lambda-decomposition

inline void suite_eulerian_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "lem4.3", "Eulerian idempotents", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto eu = lab.eulerian(a, N);
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix id = Matrix::identity(ipow(a->dim, n)), sum(id.rows(), id.cols());
    bool idem = true, orth = true, zero = true;
    std::string w;
    for (std::size_t i = 0; i <= N; ++i) {
      sum = sum + eu->at(n, i);
      if (i > n && !eu->at(n, i).is_zero()) {
        zero = false;
        w = "e^(" + std::to_string(i) + ") != 0";
      }
      for (std::size_t j = 0; j <= N; ++j) {
        Matrix p = eu->at(n, i) * eu->at(n, j);
        if (i == j && !(p == eu->at(n, i))) idem = false;
        if (i != j && !p.is_zero()) orth = false;
      }
    }
    rec.expect("idempotent", deg(n), idem);
    rec.expect("mutually orthogonal", deg(n), orth);
    rec.equal("sum to identity", deg(n), sum, id);
    rec.expect("e^(i) = 0 for i > n", deg(n), zero, w);
  }
  Convolution conv(a->dim, std::min<std::size_t>(N, 3));
  GradedEnd f = graded_sum(conv.identity(), conv.unit(), Rational(-1));
  GradedEnd fu = conv(f, conv.unit()), uf = conv(conv.unit(), f);
  GradedEnd l = conv(conv(f, f), f), r = conv(f, conv(f, f));
  for (std::size_t n = 0; n <= conv.top(); ++n) {
    rec.equal("convolution unit", deg(n), fu[n], f[n]);
    rec.equal("convolution unit", deg(n), uf[n], f[n]);
    rec.equal("convolution associative", deg(n), l[n], r[n]);
  }
}

inline void suite_eulerian(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto ea = lab.eulerian(m.source, N), eb = lab.eulerian(m.target, N);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "lem4.3", "Eulerian idempotents", x_subject(m, x));
    for (std::size_t n = 0; n <= N; ++n) {
      Matrix T = tensor_power(m.C(), m.phi, unit_vec(x), n);
      for (std::size_t i = 0; i <= n; ++i)
        rec.equal("e'^(" + std::to_string(i) + ") T(Phi) = T(Phi) e^(" + std::to_string(i) + ")", deg(n), eb->at(n, i) * T,
                  T * ea->at(n, i));
    }
  }
}

inline void suite_lambda_hh_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "thm4.4", "lambda-decomposition of HH", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto cm = lab.cyclic(a, N);
  auto eu = lab.eulerian(a, N);
  auto hh = lab.hh(a, N);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = 0; i <= n; ++i)
      rec.equal("b commutes with A (x) e^(" + std::to_string(i) + ")", deg(n), cm->b(n) * eu->on_hochschild(n, static_cast<long>(i)),
                eu->on_hochschild(n - 1, static_cast<long>(i)) * cm->b(n));
  for (std::size_t n = 0; n < hh->size(); ++n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i <= n; ++i) total += rank(induced_on_subquotient(eu->on_hochschild(n, static_cast<long>(i)), (*hh)[n], (*hh)[n]));
    rec.expect("summand dims sum to dim HH", deg(n), total == (*hh)[n].dim(),
               std::to_string(total) + " vs " + std::to_string((*hh)[n].dim()));
  }
}

inline void suite_lambda_hh(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto ea = lab.eulerian(m.source, N), eb = lab.eulerian(m.target, N);
  auto ha = lab.hh(m.source, N), hb = lab.hh(m.target, N);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "thm4.4", "lambda-decomposition of HH", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), N);
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t i = 0; i <= n; ++i)
        rec.equal("preserves summand " + std::to_string(i) + " on chains", deg(n), eb->on_hochschild(n, static_cast<long>(i)) * f[n],
                  f[n] * ea->on_hochschild(n, static_cast<long>(i)));
    for (std::size_t n = 0; n < ha->size(); ++n) {
      Matrix hf = induced_on_subquotient(f[n], (*ha)[n], (*hb)[n]);
      for (std::size_t i = 0; i <= n; ++i)
        rec.equal("preserves summand " + std::to_string(i) + " on HH", deg(n),
                  induced_on_subquotient(eb->on_hochschild(n, static_cast<long>(i)), (*hb)[n], (*hb)[n]) * hf,
                  hf * induced_on_subquotient(ea->on_hochschild(n, static_cast<long>(i)), (*ha)[n], (*ha)[n]));
    }
  }
}

inline Matrix normalized_e(const NormalizedMixed& nm, const Eulerian& eu, std::size_t n, long i) {
  return nm.P[n] * eu.on_hochschild(n, i) * nm.L[n];
}

inline void suite_lambda_hc_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "thm4.6", "lambda-decomposition of HC", a->name);
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto nm = lab.normalized(a, N);
  auto eu = lab.eulerian(a, N);
  auto tot = lab.normalized_tot(a, N);
  for (std::size_t n = 0; n < N; ++n)
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      rec.equal("B-bar e^(i) = e^(i+1) B-bar", deg(n) + ",i=" + std::to_string(i), nm->mixed.B[n] * normalized_e(*nm, *eu, n, i),
                normalized_e(*nm, *eu, n + 1, i + 1) * nm->mixed.B[n]);
      rec.equal("b-bar e^(i) = e^(i) b-bar", deg(n + 1) + ",i=" + std::to_string(i),
                nm->mixed.hoch.d[n + 1] * normalized_e(*nm, *eu, n + 1, i), normalized_e(*nm, *eu, n, i) * nm->mixed.hoch.d[n + 1]);
    }
  for (std::size_t n = 0; n <= N; ++n) {
    Matrix sum(tot->dims[n], tot->dims[n]);
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      Matrix P = lambda_tot_projector(*nm, *eu, n, i);
      sum = sum + P;
      if (n >= 1)
        rec.equal("Tot projector is a chain map", deg(n) + ",i=" + std::to_string(i), tot->d[n] * P,
                  lambda_tot_projector(*nm, *eu, n - 1, i) * tot->d[n]);
    }
    rec.equal("Tot projectors sum to identity", deg(n), sum, Matrix::identity(tot->dims[n]));
  }
  for (std::size_t n = 0; n <= M; ++n) {
    Subquotient h = tot->homology(n);
    std::size_t total = 0;
    for (long i = 0; i <= static_cast<long>(n); ++i)
      total += rank(induced_on_subquotient(lambda_tot_projector(*nm, *eu, n, i), h, h));
    rec.expect("summand dims sum to dim HC", deg(n), total == h.dim(), std::to_string(total) + " vs " + std::to_string(h.dim()));
  }
}

inline void suite_lambda_hc(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  auto ea = lab.eulerian(m.source, N), eb = lab.eulerian(m.target, N);
  auto ta = lab.normalized_tot(m.source, N), tb = lab.normalized_tot(m.target, N);
  auto ha = ta->homology_upto(M), hb = tb->homology_upto(M);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "thm4.6", "lambda-decomposition of HC", x_subject(m, x));
    ChainMap tot = na->mixed.tot_map(normalized_map(hochschild_map(m, unit_vec(x), N), *na, *nb), nb->mixed);
    for (std::size_t n = 0; n <= N; ++n)
      for (long i = 0; i <= static_cast<long>(n); ++i) {
        std::string dg = deg(n) + ",i=" + std::to_string(i);
        rec.equal("preserves Tot summand", dg, lambda_tot_projector(*nb, *eb, n, i) * tot[n], tot[n] * lambda_tot_projector(*na, *ea, n, i));
        if (n <= M) {
          Matrix hf = induced_on_subquotient(tot[n], ha[n], hb[n]);
          rec.equal("preserves HC summand", dg, induced_on_subquotient(lambda_tot_projector(*nb, *eb, n, i), hb[n], hb[n]) * hf,
                    hf * induced_on_subquotient(lambda_tot_projector(*na, *ea, n, i), ha[n], ha[n]));
        }
      }
  }
}

/** I, S, B and the summand projectors on homology of the normalized mixed complex. */
struct LambdaLadder {
  std::vector<Subquotient> hh, hc;
  std::vector<Matrix> I, S, B;                    // S[n], B[n] for n >= 2
  std::vector<std::vector<Matrix>> Ehh, Phc;      // [n][i], i in 0..n; Phc also carries i = -1 at slot 0 via phc()
  const Matrix& phc(std::size_t n, long i) const { return Phc[n][static_cast<std::size_t>(i + 1)]; }
  const Matrix& ehh(std::size_t n, long i) const { return Ehh[n][static_cast<std::size_t>(i + 1)]; }
};

inline LambdaLadder lambda_ladder(const NormalizedMixed& nm, const Eulerian& eu, const ChainComplex& tot, std::size_t M) {
  const MixedComplex& mc = nm.mixed;
  LambdaLadder L;
  L.hh = mc.hoch.homology_upto(M + 1 <= mc.top() - 1 ? M + 1 : mc.top() - 1);
  L.hc = tot.homology_upto(M);
  for (std::size_t n = 0; n < L.hh.size(); ++n) {
    L.Ehh.emplace_back();
    for (long i = -1; i <= static_cast<long>(n) + 1; ++i)
      L.Ehh[n].push_back(induced_on_subquotient(normalized_e(nm, eu, n, i), L.hh[n], L.hh[n]));
  }
  for (std::size_t n = 0; n <= M; ++n) {
    auto off = mc.tot_offsets(n);
    L.I.push_back(induced_on_subquotient(assemble(off.back(), mc.hoch.dims[n], {{0, 0, Matrix::identity(mc.hoch.dims[n])}}),
                                         L.hh[n], L.hc[n]));
    L.Phc.emplace_back();
    for (long i = -1; i <= static_cast<long>(n) + 1; ++i)
      L.Phc[n].push_back(induced_on_subquotient(lambda_tot_projector(nm, eu, n, i), L.hc[n], L.hc[n]));
  }
  L.S.resize(M + 1);
  L.B.resize(M + 1);
  for (std::size_t n = 2; n <= M; ++n) {
    auto off = mc.tot_offsets(n), low = mc.tot_offsets(n - 2);
    Matrix s = assemble(low.back(), off.back(), {{0, off[1], Matrix::identity(off.back() - off[1])}});
    L.S[n] = induced_on_subquotient(s, L.hc[n], L.hc[n - 2]);
    Matrix topB = assemble(mc.hoch.dims[n - 1], low.back(), {{0, 0, mc.B[n - 2]}});
    L.B[n] = induced_on_subquotient(topB, L.hc[n - 2], L.hh[n - 1]);
  }
  return L;
}

inline void suite_lambda_sbi_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "cor4.7", "lambda-refined periodicity ladder", a->name);
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto nm = lab.normalized(a, N);
  auto eu = lab.eulerian(a, N);
  LambdaLadder L = lambda_ladder(*nm, *eu, *lab.normalized_tot(a, N), M);
  for (std::size_t n = 0; n <= M; ++n)
    for (long i = 0; i <= static_cast<long>(n); ++i)
      rec.equal("I maps HH^(i) to HC^(i)", deg(n) + ",i=" + std::to_string(i), L.I[n] * L.ehh(n, i), L.phc(n, i) * L.I[n]);
  for (std::size_t n = 2; n <= M; ++n)
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      std::string dg = deg(n) + ",i=" + std::to_string(i);
      rec.equal("S maps HC_n^(i) to HC_{n-2}^(i-1)", dg, L.S[n] * L.phc(n, i), L.phc(n - 2, i - 1) * L.S[n]);
      rec.equal("B maps HC_{n-2}^(i-1) to HH_{n-1}^(i)", dg, L.B[n] * L.phc(n - 2, i - 1), L.ehh(n - 1, i) * L.B[n]);
      std::size_t rI = rank(L.I[n] * L.ehh(n, i)), rS = rank(L.S[n] * L.phc(n, i)), rB = rank(L.B[n] * L.phc(n - 2, i - 1));
      std::size_t rI1 = rank(L.I[n - 1 <= M ? n - 1 : M] * L.ehh(n - 1, i));
      expect_exact(rec, "row exact at HC_n^(i)", dg, rI, rS, rank(L.phc(n, i)));
      expect_exact(rec, "row exact at HC_{n-2}^(i-1)", dg, rS, rB, rank(L.phc(n - 2, i - 1)));
      expect_exact(rec, "row exact at HH_{n-1}^(i)", dg, rB, rI1, rank(L.ehh(n - 1, i)));
    }
  if (M < N) rec.skip("refined ladder", deg_range(M + 1, N), "certified through " + deg(M));
}

inline void suite_lambda_sbi(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, M = certified_total(N);
  auto na = lab.normalized(m.source, N), nb = lab.normalized(m.target, N);
  auto ea = lab.eulerian(m.source, N), eb = lab.eulerian(m.target, N);
  LambdaLadder La = lambda_ladder(*na, *ea, *lab.normalized_tot(m.source, N), M);
  LambdaLadder Lb = lambda_ladder(*nb, *eb, *lab.normalized_tot(m.target, N), M);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "cor4.7", "lambda-refined periodicity ladder", x_subject(m, x));
    ChainMap f = normalized_map(hochschild_map(m, unit_vec(x), N), *na, *nb);
    ChainMap tot = na->mixed.tot_map(f, nb->mixed);
    std::vector<Matrix> hh, hc;
    for (std::size_t n = 0; n < La.hh.size(); ++n) hh.push_back(induced_on_subquotient(f[n], La.hh[n], Lb.hh[n]));
    for (std::size_t n = 0; n <= M; ++n) hc.push_back(induced_on_subquotient(tot[n], La.hc[n], Lb.hc[n]));
    for (std::size_t n = 0; n <= M; ++n)
      for (long i = 0; i <= static_cast<long>(n); ++i)
        rec.equal("I square on summand", deg(n) + ",i=" + std::to_string(i), Lb.I[n] * hh[n] * La.ehh(n, i),
                  hc[n] * La.I[n] * La.ehh(n, i));
    for (std::size_t n = 2; n <= M; ++n)
      for (long i = 0; i <= static_cast<long>(n); ++i) {
        std::string dg = deg(n) + ",i=" + std::to_string(i);
        rec.equal("S square on summand", dg, Lb.S[n] * hc[n] * La.phc(n, i), hc[n - 2] * La.S[n] * La.phc(n, i));
        rec.equal("B square on summand", dg, Lb.B[n] * hc[n - 2] * La.phc(n - 2, i - 1), hh[n - 1] * La.B[n] * La.phc(n - 2, i - 1));
      }
  }
}

// ---------------------------------------------------------------------------
// Lie and Leibniz

inline void lie_structure(Recorder& rec, const LieAlgebra& g, const ChainComplex& cc, bool leibniz) {
  auto f = leibniz ? leibniz_failure(g) : lie_failure(g);
  rec.expect(leibniz ? "Leibniz identity on " + g.name : "antisymmetry and Jacobi on " + g.name, "", !f, f ? *f : "");
  expect_square_zero(rec, (leibniz ? "d_CL^2 = 0 on " : "d_CE^2 = 0 on ") + g.name, cc);
}

inline std::vector<std::size_t> matrix_sizes(const Lab& lab) {
  std::vector<std::size_t> rs;
  for (std::size_t r = 1; r <= lab.caps().max_matrix_size; ++r) rs.push_back(r);
  return rs;
}

inline void suite_ce_coproduct_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop5.1", "CE coproduct", a->name);
  for (std::size_t r : matrix_sizes(lab)) {
    auto ce = lab.ce(a, r, lab.caps().max_lie_degree);
    lie_structure(rec, *ce->g, ce->cc, false);
  }
}

inline void suite_ce_coproduct(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    LieMeasuring gm = gl_measuring(m, r);
    auto ca = lab.ce(m.source, r, L), cb = lab.ce(m.target, r, L);
    for (Index x = 0; x < m.C().dim; ++x) {
      Recorder rec(out, "prop5.1", "CE coproduct", x_subject(m, x) + " r=" + std::to_string(r));
      if (x == 0) {
        std::string w;
        try {
          validate_lie_measuring(gm);
        } catch (const Error& e) {
          w = e.what();
        }
        rec.expect("gl_r(Phi) is a Lie measuring", "", w.empty(), w);
      }
      ChainMap f = ca->map(gm, unit_vec(x), *cb);
      std::vector<ChainMap> by;
      for (Index y = 0; y < m.C().dim; ++y) by.push_back(ca->map(gm, unit_vec(y), *cb));
      expect_chain_map(rec, "CE^Psi is a chain map", f, ca->cc, cb->cc);
      for (std::size_t n = 0; n <= L; ++n)
        for (std::size_t p = 0; p <= n; ++p) {
          std::size_t q = n - p;
          Matrix lhs = wedge_split(*cb, p, q) * f[n];
          Matrix rhs = sweedler_kron(m.C(), unit_vec(x), [&](const SparseVec& v) { return unit_pick(by, v)[p]; },
                                     [&](const SparseVec& v) { return unit_pick(by, v)[q]; }) *
                       wedge_split(*ca, p, q);
          rec.equal("diagonal coproduct square", deg(p, q), lhs, rhs);
        }
    }
  }
}

/** Largest n such that C_n(M_r(A)) fits the cap for both algebras, capped at want. */
inline std::size_t fit_matrix(Lab& lab, const Measuring& m, std::size_t r, std::size_t want) {
  return std::min(lab.fit_tensor(r * r * m.A().dim, want), lab.fit_tensor(r * r * m.B().dim, want));
}

/** Beyond the matrix cap, basis-by-basis checks reach words up to this multiple of it. */
constexpr std::size_t kWordFactor = 64;

inline std::size_t fit_words(Lab& lab, std::size_t base, std::size_t want) {
  std::size_t n = 0;
  while (n < want && ipow(base, n + 2) <= kWordFactor * lab.cap()) ++n;
  return n;
}

inline std::size_t fit_matrix_words(Lab& lab, const Measuring& m, std::size_t r, std::size_t want) {
  return std::min(fit_words(lab, r * r * m.A().dim, want), fit_words(lab, r * r * m.B().dim, want));
}

/** Class of trace(v) in C-tilde_n(A). */
inline SparseVec trace_class(const Algebra& a, std::size_t r, const QuotientComplex& ct, std::size_t n, const WordVec& v) {
  return ct.q[n].projection().apply(to_sparse(trace_words(a.dim, r, v), a.dim, n + 1));
}

/** trace o theta : Lambda^{n+1} gl_r(A) -> C-tilde_n(A). */
inline Matrix trace_theta(const Algebra& a, std::size_t r, const CEComplex& ce, const QuotientComplex& ct, std::size_t n) {
  return Matrix::build(ct.q[n].dim(), ce.wedge[n + 1].size(), [&](std::size_t j, Accumulator& acc) {
    for (const auto& [i, c] : trace_class(a, r, ct, n, theta_words(ce.wedge[n + 1].word(j)))) acc.add(i, c);
  });
}

/** Columns trace(u) over the class representatives u of C-tilde_n(M_r(A)). */
inline Matrix trace_on_classes(const Algebra& a, std::size_t r, const QuotientComplex& ct, std::size_t n,
                               const std::vector<Word>& classes) {
  return Matrix::build(ct.q[n].dim(), classes.size(), [&](std::size_t j, Accumulator& acc) {
    for (const auto& [i, c] : trace_class(a, r, ct, n, {{classes[j], Rational(1)}})) acc.add(i, c);
  });
}

/** Theta and trace squares for phi(x) in degree n, evaluated on basis elements. */
inline void word_squares(Recorder& rec, const Measuring& m, const Measuring& mr, const SparseVec& x, std::size_t r,
                         std::size_t n, const CEComplex& cea, const CEComplex& ceb, const Matrix& ce_x,
                         const QuotientComplex& cta, const QuotientComplex& ctb, const Matrix& ct_x) {
  const std::size_t DB = r * r * m.B().dim, cols = cea.wedge[n + 1].size();
  Matrix lhs = word_columns(DB, n + 1, cols, [&](std::size_t j) {
    return canonical(measure(mr, x, canonical(theta_words(cea, n, unit_vec(static_cast<Index>(j))))));
  });
  Matrix rhs = word_columns(DB, n + 1, cols, [&](std::size_t j) { return canonical(theta_words(ceb, n, ce_x.col(j))); });
  rec.equal("theta square", deg(n), lhs, rhs);
  auto classes = cyclic_classes(r * r * m.A().dim, n);
  Matrix tr_b = Matrix::build(ctb.q[n].dim(), classes.size(), [&](std::size_t j, Accumulator& acc) {
    for (const auto& [i, c] : trace_class(m.B(), r, ctb, n, measure(mr, x, {{classes[j], Rational(1)}}))) acc.add(i, c);
  });
  rec.equal("trace square", deg(n), ct_x * trace_on_classes(m.A(), r, cta, n, classes), tr_b);
}

inline void suite_theta_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "lem5.2", "theta and trace ladder", a->name);
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    std::string rs = "r=" + std::to_string(r) + ",";
    std::size_t T = lab.fit_tensor(r * r * a->dim, L), E = fit_words(lab, r * r * a->dim, L);
    auto ma = lab.matrix(a, r);
    auto ce = lab.ce(a, r, E + 1);
    auto ctM = lab.ctilde(ma, T), ctA = lab.ctilde(a, E);
    for (std::size_t n = 1; n <= T; ++n) {
      Matrix th = ctM->q[n].projection() * theta_raw(*ce, n), thl = ctM->q[n - 1].projection() * theta_raw(*ce, n - 1);
      rec.equal("theta is a chain map", rs + deg(n), ctM->cc.d[n] * th, thl * ce->cc.d[n + 1]);
      Matrix tr = descend(trace_map(a->dim, r, n), ctM->q[n], ctA->q[n], "trace");
      Matrix trl = descend(trace_map(a->dim, r, n - 1), ctM->q[n - 1], ctA->q[n - 1], "trace");
      rec.equal("trace is a chain map", rs + deg(n), ctA->cc.d[n] * tr, trl * ctM->cc.d[n]);
    }
    for (std::size_t n = 0; n < T; ++n) {
      Matrix tr = descend(trace_map(a->dim, r, n), ctM->q[n], ctA->q[n], "trace");
      expect_iso(rec, "trace induces an isomorphism on HC", rs + deg(n),
                 induced_on_subquotient(tr, ctM->cc.homology(n), ctA->cc.homology(n)));
    }
    for (std::size_t n = T + 1; n <= E; ++n) {
      const std::size_t D = ma->dim, cols = ce->wedge[n + 1].size();
      Matrix lhs = word_columns(D, n, cols, [&](std::size_t j) {
        return canonical(hochschild_b(*ma, canonical(theta_words(*ce, n, unit_vec(static_cast<Index>(j))))));
      });
      Matrix rhs = word_columns(D, n, cols, [&](std::size_t j) { return canonical(theta_words(*ce, n - 1, ce->cc.d[n + 1].col(j))); });
      rec.equal("theta is a chain map", rs + deg(n), lhs, rhs);
      auto classes = cyclic_classes(D, n);
      Matrix tr = trace_on_classes(*a, r, *ctA, n, classes);
      Matrix tr_t = Matrix::build(ctA->q[n].dim(), classes.size(), [&](std::size_t j, Accumulator& acc) {
        for (const auto& [i, c] : trace_class(*a, r, *ctA, n, cyclic_t(classes[j]))) acc.add(i, c);
      });
      rec.equal("trace descends to C-tilde", rs + deg(n), tr_t, tr);
      Matrix tr_b = Matrix::build(ctA->q[n - 1].dim(), classes.size(), [&](std::size_t j, Accumulator& acc) {
        for (const auto& [i, c] : trace_class(*a, r, *ctA, n - 1, hochschild_b(*ma, classes[j]))) acc.add(i, c);
      });
      rec.equal("trace is a chain map", rs + deg(n), ctA->cc.d[n] * tr, tr_b);
    }
    const std::string too_big = "C_n(M_" + std::to_string(r) + "(" + a->name + ")) exceeds the dimension cap";
    if (T < L) rec.skip("trace induces an isomorphism on HC", rs + deg_range(T, L - 1), too_big);
    if (E < L) rec.skip("theta and trace", rs + deg_range(E + 1, L), too_big);
  }
}

inline void suite_theta(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    std::size_t T = fit_matrix(lab, m, r, L), E = fit_matrix_words(lab, m, r, L);
    LieMeasuring gm = gl_measuring(m, r);
    Measuring mr = r == 1 ? m : matrix_measuring(m, r);
    auto ma = lab.matrix(m.source, r), mb = lab.matrix(m.target, r);
    auto cea = lab.ce(m.source, r, E + 1), ceb = lab.ce(m.target, r, E + 1);
    auto ctMa = lab.ctilde(ma, T), ctMb = lab.ctilde(mb, T), cta = lab.ctilde(m.source, E), ctb = lab.ctilde(m.target, E);
    std::vector<Matrix> tt_a, tt_b;
    for (std::size_t n = T + 1; n <= E; ++n) {
      tt_a.push_back(trace_theta(m.A(), r, *cea, *cta, n));
      tt_b.push_back(trace_theta(m.B(), r, *ceb, *ctb, n));
    }
    for (Index x = 0; x < m.C().dim; ++x) {
      Recorder rec(out, "lem5.2", "theta and trace ladder", x_subject(m, x) + " r=" + std::to_string(r));
      ChainMap ce = cea->map(gm, unit_vec(x), *ceb);
      ChainMap ctM = ctMa->map(hochschild_map(mr, unit_vec(x), T), *ctMb, "C-tilde on matrices");
      ChainMap ct = cta->map(hochschild_map(m, unit_vec(x), E), *ctb, "C-tilde");
      for (std::size_t n = 0; n <= T; ++n) {
        Matrix tha = ctMa->q[n].projection() * theta_raw(*cea, n), thb = ctMb->q[n].projection() * theta_raw(*ceb, n);
        Matrix tra = descend(trace_map(m.A().dim, r, n), ctMa->q[n], cta->q[n], "trace");
        Matrix trb = descend(trace_map(m.B().dim, r, n), ctMb->q[n], ctb->q[n], "trace");
        rec.equal("theta square", deg(n), ctM[n] * tha, thb * ce[n + 1]);
        rec.equal("trace square", deg(n), ct[n] * tra, trb * ctM[n]);
        rec.equal("trace o theta ladder", deg(n), ct[n] * tra * tha, trb * thb * ce[n + 1]);
      }
      for (std::size_t n = T + 1; n <= E; ++n) {
        word_squares(rec, m, mr, unit_vec(x), r, n, *cea, *ceb, ce[n + 1], *cta, *ctb, ct[n]);
        rec.equal("trace o theta ladder", deg(n), ct[n] * tt_a[n - T - 1], tt_b[n - T - 1] * ce[n + 1]);
      }
      if (E < L) rec.skip("theta and trace squares", deg_range(E + 1, L), "C_n(M_" + std::to_string(r) + ") exceeds the dimension cap");
    }
  }
}

inline void suite_cl_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop5.5", "Leibniz measuring", a->name);
  for (std::size_t r : matrix_sizes(lab)) {
    auto cl = lab.cl(a, r, lab.caps().max_lie_degree);
    lie_structure(rec, *cl->g, cl->cc, true);
  }
}

inline void suite_cl(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    LieMeasuring gm = gl_measuring(m, r);
    auto ca = lab.cl(m.source, r, L), cb = lab.cl(m.target, r, L);
    std::vector<ChainMap> by;
    for (Index y = 0; y < m.C().dim; ++y) by.push_back(ca->map(gm, unit_vec(y)));
    for (Index x = 0; x < m.C().dim; ++x) {
      Recorder rec(out, "prop5.5", "Leibniz measuring", x_subject(m, x) + " r=" + std::to_string(r));
      expect_chain_map(rec, "CL^Psi is a chain map", by[x], ca->cc, cb->cc);
      for (std::size_t n = 0; n <= L; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::size_t p = static_cast<std::size_t>(__builtin_popcount(mask)), q = n - p;
          Matrix lhs = tensor_split(cb->g->dim, n, mask) * by[x][n];
          Matrix rhs = sweedler_kron(m.C(), unit_vec(x), [&](const SparseVec& v) { return unit_pick(by, v)[p]; },
                                     [&](const SparseVec& v) { return unit_pick(by, v)[q]; }) *
                       tensor_split(ca->g->dim, n, mask);
          rec.equal("tensor split square, mask " + std::to_string(mask), deg(p, q), lhs, rhs);
        }
    }
  }
}

inline std::size_t fit_v(const Lab& lab, std::size_t d, std::size_t want) {
  std::size_t n = 0;
  mpz_class fact = 1;
  while (n < want) {
    fact *= static_cast<unsigned long>(n + 1);
    if (mpz_class(fact * static_cast<unsigned long>(ipow(d, n + 2))) > static_cast<unsigned long>(lab.cap())) break;
    ++n;
  }
  return n;
}

inline void suite_v_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop5.6", "iota/zeta squares", a->name);
  const std::size_t N = lab.caps().max_degree, T = fit_v(lab, a->dim, N);
  auto v = lab.vcomplex(a, T);
  auto cm = lab.cyclic(a, T);
  for (std::size_t n = 0; n <= T; ++n) {
    mpz_class fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
    rec.expect("|U_{n+1}| = n!", deg(n), v->words.cycles[n].size() == fact.get_ui());
    bool ok = true;
    for (const Word& L : v->words.cycles[n]) {
      Perm w = CyclicWords::omega(L), c(n + 1), conj(n + 1);
      for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<Index>((k + 1) % (n + 1));
      Perm wi = perm_inverse(w);
      for (std::size_t k = 0; k <= n; ++k) conj[k] = w[c[wi[k]]];
      if (conj != CyclicWords::as_perm(L) || w[0] != 0) ok = false;
    }
    rec.expect("sigma = omega c omega^{-1}, omega fixes the first letter", deg(n), ok);
    rec.equal("zeta iota = id", deg(n), v->zeta[n] * v->iota[n], Matrix::identity(cm->dim(n)));
  }
  for (std::size_t n = 2; n <= T; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        rec.equal("d" + std::to_string(i) + "d" + std::to_string(j) + " = d" + std::to_string(j - 1) + "d" + std::to_string(i), deg(n),
                  v->faces[n - 1][i] * v->faces[n][j], v->faces[n - 1][j - 1] * v->faces[n][i]);
  expect_square_zero(rec, "b_V^2 = 0", v->cc);
  expect_chain_map(rec, "iota is a chain map", v->iota, cm->hochschild(), v->cc);
  if (T < N) rec.skip("V complex", deg_range(T + 1, N), "V_n(" + a->name + ") exceeds the dimension cap");
}

inline void suite_v(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree, T = std::min(fit_v(lab, m.A().dim, N), fit_v(lab, m.B().dim, N));
  auto va = lab.vcomplex(m.source, T), vb = lab.vcomplex(m.target, T);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop5.6", "iota/zeta squares", x_subject(m, x));
    ChainMap f = hochschild_map(m, unit_vec(x), T), vf = va->map(f);
    expect_chain_map(rec, "V^Phi is a chain map", vf, va->cc, vb->cc);
    for (std::size_t n = 0; n <= T; ++n) {
      rec.equal("iota square", deg(n), vf[n] * va->iota[n], vb->iota[n] * f[n]);
      rec.equal("zeta square", deg(n), f[n] * va->zeta[n], vb->zeta[n] * vf[n]);
    }
    if (T < N) rec.skip("iota/zeta squares", deg_range(T + 1, N), "V_n exceeds the dimension cap");
  }
}

inline void suite_coinv_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "lem6.1", "coinvariant complexes", a->name);
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    std::string rs = "r=" + std::to_string(r) + ",";
    auto ce = lab.ce(a, r, L);
    auto cl = lab.cl(a, r, L);
    auto ceb = lab.ce_bar(a, r, L), clb = lab.cl_bar(a, r, L);
    expect_square_zero(rec, "CE-bar d^2 = 0, r=" + std::to_string(r), ceb->cc);
    expect_square_zero(rec, "CL-bar d^2 = 0, r=" + std::to_string(r), clb->cc);
    for (std::size_t n = 1; n <= L; ++n) {
      rec.equal("CE projection commutes with d", rs + deg(n), ceb->q[n - 1].projection() * ce->cc.d[n], ceb->cc.d[n] * ceb->q[n].projection());
      rec.equal("CL projection commutes with d", rs + deg(n), clb->q[n - 1].projection() * cl->cc.d[n], clb->cc.d[n] * clb->q[n].projection());
    }
    for (std::size_t n = 0; n < L; ++n) {
      expect_iso(rec, "CE -> CE-bar iso on homology", rs + deg(n),
                 induced_on_subquotient(ceb->q[n].projection(), ce->cc.homology(n), ceb->cc.homology(n)));
      expect_iso(rec, "CL -> CL-bar iso on homology", rs + deg(n),
                 induced_on_subquotient(clb->q[n].projection(), cl->cc.homology(n), clb->cc.homology(n)));
    }
  }
}

inline void suite_coinv(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree;
  for (std::size_t r : matrix_sizes(lab)) {
    LieMeasuring gm = gl_measuring(m, r);
    auto cea = lab.ce(m.source, r, L), ceb = lab.ce(m.target, r, L);
    auto cla = lab.cl(m.source, r, L), clb = lab.cl(m.target, r, L);
    auto qa = lab.ce_bar(m.source, r, L), qb = lab.ce_bar(m.target, r, L);
    auto la = lab.cl_bar(m.source, r, L), lb = lab.cl_bar(m.target, r, L);
    for (Index x = 0; x < m.C().dim; ++x) {
      Recorder rec(out, "lem6.1", "coinvariant complexes", x_subject(m, x) + " r=" + std::to_string(r));
      ChainMap f = cea->map(gm, unit_vec(x), *ceb), g = cla->map(gm, unit_vec(x));
      ChainMap fb = qa->map(f, *qb, "CE-bar map"), gb = la->map(g, *lb, "CL-bar map");
      expect_chain_map(rec, "CE-bar map is a chain map", fb, qa->cc, qb->cc);
      expect_chain_map(rec, "CL-bar map is a chain map", gb, la->cc, lb->cc);
      for (std::size_t n = 0; n <= L; ++n) {
        rec.equal("CE projection square", deg(n), qb->q[n].projection() * f[n], fb[n] * qa->q[n].projection());
        rec.equal("CL projection square", deg(n), lb->q[n].projection() * g[n], gb[n] * la->q[n].projection());
      }
    }
  }
}

/** Product of coinvariant complexes through the block sum gl_r + gl_r -> gl_2r. */
template <class ProdA, class ProdB, class Small>
void product_checks(Recorder& rec, const std::string& kind, std::size_t L, const ProdA& prod_a, const ProdB& prod_b,
                    const ChainComplex& sa, const ChainComplex& big_a, const CoinvariantComplex& qa_small,
                    const CoinvariantComplex& qa_big, const CoinvariantComplex& qb_big, const Small& small_maps,
                    const ChainMap& big_map, const Coalgebra& c, Index x) {
  for (std::size_t p = 0; p <= L; ++p)
    for (std::size_t q = 0; p + q <= L; ++q) {
      Matrix lhs = big_map[p + q] * prod_a(p, q);
      Matrix rhs = prod_b(p, q) * sweedler_kron(c, unit_vec(x), [&](const SparseVec& v) { return unit_pick(small_maps, v)[p]; },
                                                [&](const SparseVec& v) { return unit_pick(small_maps, v)[q]; });
      rec.equal(kind + " product measuring", deg(p, q), lhs, rhs);
      rec.equal(kind + " product measuring on coinvariants", deg(p, q), qb_big.q[p + q].projection() * lhs,
                qb_big.q[p + q].projection() * rhs);
      if (x != 0) continue;
      Matrix rel = kron(qa_small.q[p].relations(), Matrix::identity(sa.dims[q]));
      Matrix rel2 = kron(Matrix::identity(sa.dims[p]), qa_small.q[q].relations());
      rec.zero(kind + " product descends to coinvariants", deg(p, q), qa_big.q[p + q].projection() * prod_a(p, q) * rel);
      rec.zero(kind + " product descends to coinvariants", deg(p, q), qa_big.q[p + q].projection() * prod_a(p, q) * rel2);
      if (p + q >= 1) {
        Matrix lhs2 = big_a.d[p + q] * prod_a(p, q);
        Matrix rhs2(lhs2.rows(), lhs2.cols());
        if (p >= 1) rhs2 = rhs2 + prod_a(p - 1, q) * kron(sa.d[p], Matrix::identity(sa.dims[q]));
        if (q >= 1) rhs2 = rhs2 + prod_a(p, q - 1) * kron(Matrix::identity(sa.dims[p]), sa.d[q]) * Rational(p % 2 ? -1 : 1);
        rec.equal(kind + " product is a chain map", deg(p, q), lhs2, rhs2);
      }
    }
}

inline void suite_ce_product(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree, r = 1;
  LieMeasuring g1 = gl_measuring(m, r), g2 = gl_measuring(m, 2 * r);
  auto sa = lab.ce(m.source, r, L), sb = lab.ce(m.target, r, L), ba = lab.ce(m.source, 2 * r, L), bb = lab.ce(m.target, 2 * r, L);
  auto qsa = lab.ce_bar(m.source, r, L), qba = lab.ce_bar(m.source, 2 * r, L), qbb = lab.ce_bar(m.target, 2 * r, L);
  auto [ia1, ia2] = block_inclusions(m.A().dim, r);
  auto [ib1, ib2] = block_inclusions(m.B().dim, r);
  auto pa = [&](std::size_t p, std::size_t q) { return wedge_block_product(*sa, *ba, ia1, ia2, p, q); };
  auto pb = [&](std::size_t p, std::size_t q) { return wedge_block_product(*sb, *bb, ib1, ib2, p, q); };
  std::vector<ChainMap> small;
  for (Index y = 0; y < m.C().dim; ++y) small.push_back(sa->map(g1, unit_vec(y), *sb));
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop6.2", "CE-bar product measuring", x_subject(m, x));
    product_checks(rec, "CE", L, pa, pb, sa->cc, ba->cc, *qsa, *qba, *qbb, small, ba->map(g2, unit_vec(x), *bb), m.C(), x);
  }
}

inline void suite_cl_product(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree, r = 1;
  LieMeasuring g1 = gl_measuring(m, r), g2 = gl_measuring(m, 2 * r);
  auto sa = lab.cl(m.source, r, L), ba = lab.cl(m.source, 2 * r, L);
  auto qsa = lab.cl_bar(m.source, r, L), qba = lab.cl_bar(m.source, 2 * r, L), qbb = lab.cl_bar(m.target, 2 * r, L);
  auto [ia1, ia2] = block_inclusions(m.A().dim, r);
  auto [ib1, ib2] = block_inclusions(m.B().dim, r);
  auto pa = [&](std::size_t p, std::size_t q) { return tensor_block_product(ia1, ia2, p, q); };
  auto pb = [&](std::size_t p, std::size_t q) { return tensor_block_product(ib1, ib2, p, q); };
  std::vector<ChainMap> small;
  for (Index y = 0; y < m.C().dim; ++y) small.push_back(sa->map(g1, unit_vec(y)));
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop6.5", "CL-bar product measuring", x_subject(m, x));
    product_checks(rec, "CL", L, pa, pb, sa->cc, ba->cc, *qsa, *qba, *qbb, small, ba->map(g2, unit_vec(x)), m.C(), x);
  }
}

// ---------------------------------------------------------------------------
// Dihedral

inline void suite_dihedral_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "prop7.2", "dihedral maps", a->name);
  const std::size_t N = lab.caps().max_degree;
  auto dc = lab.dihedral(a, N);
  auto cm = lab.cyclic(a, N);
  for (std::size_t n = 0; n <= N; ++n) {
    std::string f = dihedral_relation_failure(*dc, n);
    rec.expect("dihedral group relations", deg(n), f.empty(), f);
    if (n >= 1)
      rec.equal("projection commutes with b", deg(n), dc->q[n - 1].projection() * cm->b(n), dc->cc.d[n] * dc->q[n].projection());
  }
  expect_square_zero(rec, "b-bar^2 = 0 on D", dc->cc);
}

inline void suite_dihedral(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t N = lab.caps().max_degree;
  auto da = lab.dihedral(m.source, N), db = lab.dihedral(m.target, N);
  for (Index x = 0; x < m.C().dim; ++x) {
    Recorder rec(out, "prop7.2", "dihedral maps", x_subject(m, x));
    rec.equal("commutes with the involutions", "", m.phi[x] * *m.A().involution, *m.B().involution * m.phi[x]);
    ChainMap f = hochschild_map(m, unit_vec(x), N);
    for (std::size_t n = 0; n <= N; ++n) {
      rec.equal("intertwines u", deg(n), f[n] * da->u[n], db->u[n] * f[n]);
      rec.equal("intertwines v", deg(n), f[n] * da->v[n], db->v[n] * f[n]);
    }
    ChainMap fd = da->map(f, *db, "dihedral map");
    expect_chain_map(rec, "D^Phi is a chain map", fd, da->cc, db->cc);
    for (std::size_t n = 0; n <= N; ++n)
      rec.equal("projection square", deg(n), db->q[n].projection() * f[n], fd[n] * da->q[n].projection());
  }
}

inline std::vector<std::pair<std::string, std::size_t>> classical_rows(const Lab& lab) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (std::size_t r = 1; r <= lab.caps().max_matrix_size; ++r) rows.emplace_back("sk", r);
  for (std::size_t r = 1; 2 * r <= lab.caps().max_matrix_size; ++r) rows.emplace_back("sp", r);
  return rows;
}

inline std::size_t classical_size(const std::string& kind, std::size_t r) { return kind == "sk" ? r : 2 * r; }

inline std::string classical_name(const std::string& kind, std::size_t r) {
  return kind + std::to_string(classical_size(kind, r));
}

inline void suite_restrict_algebra(Lab& lab, const AlgebraPtr& a, Report& out) {
  Recorder rec(out, "lem7.3", "sk/sp restriction", a->name);
  for (const auto& [kind, r] : classical_rows(lab)) {
    std::size_t R = classical_size(kind, r);
    Matrix op = kind == "sk" ? transpose_conjugate(*a, R) : symplectic_T(*a, r);
    rec.equal(classical_name(kind, r) + ": defining operator is an involution", "", op * op, Matrix::identity(op.rows()));
    auto s = lab.classical(kind, a, r);
    auto f = lie_failure(*s->g);
    rec.expect(classical_name(kind, r) + " is a Lie subalgebra", "dim=" + std::to_string(s->g->dim), !f, f ? *f : "");
  }
}

inline void suite_restrict(Lab& lab, const Measuring& m, Report& out) {
  for (const auto& [kind, r] : classical_rows(lab)) {
    std::size_t R = classical_size(kind, r);
    LieMeasuring gm = gl_measuring(m, R);
    Matrix oa = kind == "sk" ? transpose_conjugate(m.A(), R) : symplectic_T(m.A(), r);
    Matrix ob = kind == "sk" ? transpose_conjugate(m.B(), R) : symplectic_T(m.B(), r);
    auto sa = lab.classical(kind, m.source, r), sb = lab.classical(kind, m.target, r);
    Recorder rec(out, "lem7.3", "sk/sp restriction", m.name + " " + classical_name(kind, r));
    for (Index x = 0; x < m.C().dim; ++x)
      rec.equal("Psi commutes with the defining operator", "x=" + m.C().labels[x], gm.phi[x] * oa, ob * gm.phi[x]);
    std::string w;
    try {
      validate_lie_measuring(restrict_measuring(gm, *sa, *sb));
    } catch (const Error& e) {
      w = e.what();
    }
    rec.expect("restricts to a Lie measuring", "", w.empty(), w);
  }
}

inline void suite_ladder(Lab& lab, const Measuring& m, Report& out) {
  const std::size_t L = lab.caps().max_lie_degree;
  for (const auto& [kind, r] : classical_rows(lab)) {
    std::size_t R = classical_size(kind, r);
    std::size_t T = fit_matrix(lab, m, R, L), E = fit_matrix_words(lab, m, R, L);
    auto S = lab.classical(kind, m.source, r), S2 = lab.classical(kind, m.target, r);
    LieMeasuring glm = gl_measuring(m, R);
    LieMeasuring res = restrict_measuring(glm, *S, *S2);
    auto ceS = lab.ce_classical(kind, m.source, r, E + 1), ceS2 = lab.ce_classical(kind, m.target, r, E + 1);
    auto ceG = lab.ce(m.source, R, E + 1), ceG2 = lab.ce(m.target, R, E + 1);
    auto ma = lab.matrix(m.source, R), mb = lab.matrix(m.target, R);
    auto ctMa = lab.ctilde(ma, T), ctMb = lab.ctilde(mb, T), ctA = lab.ctilde(m.source, E), ctB = lab.ctilde(m.target, E);
    auto dA = lab.dihedral(m.source, E), dB = lab.dihedral(m.target, E);
    std::vector<Matrix> tt_a, tt_b;
    for (std::size_t n = T + 1; n <= E; ++n) {
      tt_a.push_back(trace_theta(m.A(), R, *ceG, *ctA, n));
      tt_b.push_back(trace_theta(m.B(), R, *ceG2, *ctB, n));
    }
    Measuring mr = R == 1 ? m : matrix_measuring(m, R);
    for (Index x = 0; x < m.C().dim; ++x) {
      Recorder rec(out, "thm7.5", "sk/sp ladder", x_subject(m, x) + " " + classical_name(kind, r));
      SparseVec xv = unit_vec(x);
      ChainMap ceSx = ceS->map(res, xv, *ceS2), ceGx = ceG->map(glm, xv, *ceG2);
      ChainMap cphi = hochschild_map(m, xv, E);
      ChainMap ctMx = ctMa->map(hochschild_map(mr, xv, T), *ctMb, "C-tilde on matrices"), ctx = ctA->map(cphi, *ctB, "C-tilde");
      ChainMap dx = dA->map(cphi, *dB, "dihedral");
      expect_chain_map(rec, "CE map on " + classical_name(kind, r) + " is a chain map", ceSx, ceS->cc, ceS2->cc);
      for (std::size_t n = 0; n <= T; ++n) {
        Matrix inc = lambda_map(*ceS, *ceG, S->inc, n + 1), inc2 = lambda_map(*ceS2, *ceG2, S2->inc, n + 1);
        Matrix th = ctMa->q[n].projection() * theta_raw(*ceG, n), th2 = ctMb->q[n].projection() * theta_raw(*ceG2, n);
        Matrix tr = descend(trace_map(m.A().dim, R, n), ctMa->q[n], ctA->q[n], "trace");
        Matrix tr2 = descend(trace_map(m.B().dim, R, n), ctMb->q[n], ctB->q[n], "trace");
        Matrix pr = dA->from_ctilde(*ctA, n), pr2 = dB->from_ctilde(*ctB, n);
        rec.equal("inclusion square", deg(n), ceGx[n + 1] * inc, inc2 * ceSx[n + 1]);
        rec.equal("theta square", deg(n), ctMx[n] * th, th2 * ceGx[n + 1]);
        rec.equal("trace square", deg(n), ctx[n] * tr, tr2 * ctMx[n]);
        rec.equal("projection to D square", deg(n), dx[n] * pr, pr2 * ctx[n]);
        rec.equal("full ladder", deg(n), dx[n] * pr * tr * th * inc, pr2 * tr2 * th2 * inc2 * ceSx[n + 1]);
      }
      for (std::size_t n = T + 1; n <= E; ++n) {
        Matrix inc = lambda_map(*ceS, *ceG, S->inc, n + 1), inc2 = lambda_map(*ceS2, *ceG2, S2->inc, n + 1);
        Matrix pr = dA->from_ctilde(*ctA, n), pr2 = dB->from_ctilde(*ctB, n);
        rec.equal("inclusion square", deg(n), ceGx[n + 1] * inc, inc2 * ceSx[n + 1]);
        word_squares(rec, m, mr, xv, R, n, *ceG, *ceG2, ceGx[n + 1], *ctA, *ctB, ctx[n]);
        rec.equal("projection to D square", deg(n), dx[n] * pr, pr2 * ctx[n]);
        rec.equal("full ladder", deg(n), dx[n] * pr * tt_a[n - T - 1] * inc, pr2 * tt_b[n - T - 1] * inc2 * ceSx[n + 1]);
      }
      if (E < L)
        rec.skip("ladder squares", deg_range(E + 1, L), "C_n(M_" + std::to_string(R) + ") exceeds the dimension cap");
    }
  }
}

// ---------------------------------------------------------------------------
// Registry

struct Suite {
  std::string id;
  std::string title;
  std::function<bool(const Algebra&)> algebra_pred;
  std::function<void(Lab&, const AlgebraPtr&, Report&)> algebra_run;
  std::function<bool(const Measuring&)> measuring_pred;
  std::function<void(Lab&, const Measuring&, Report&)> measuring_run;
};

inline bool any_algebra(const Algebra&) { return true; }
inline bool commutative_algebra(const Algebra& a) { return a.commutative; }
inline bool involutive_algebra(const Algebra& a) { return a.involution.has_value(); }
inline bool any_measuring(const Measuring&) { return true; }
inline bool commutative_measuring(const Measuring& m) { return m.A().commutative && m.B().commutative; }
inline bool involutive_measuring(const Measuring& m) { return m.A().involution && m.B().involution; }

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"prop2.2", "periodicity ladder", any_algebra, suite_sbi_algebra, any_measuring, suite_sbi},
      {"prop2.4", "antisymmetrization squares", any_algebra, suite_antisym_algebra, any_measuring, suite_antisym},
      {"prop2.5", "eps/pi squares", commutative_algebra, suite_eps_pi_algebra, commutative_measuring, suite_eps_pi},
      {"prop2.6", "pi-bar square", commutative_algebra, suite_pibar_algebra, commutative_measuring, suite_pibar},
      {"prop3.1", "normalized mixed complex", any_algebra, suite_routes_algebra, any_measuring, suite_routes},
      {"thm3.2", "star product measuring", commutative_algebra, suite_star_algebra, commutative_measuring, suite_star},
      {"prop3.4", "comodule measuring", nullptr, nullptr, commutative_measuring, suite_comodule},
      {"lem4.3", "Eulerian idempotents", commutative_algebra, suite_eulerian_algebra, commutative_measuring, suite_eulerian},
      {"thm4.4", "lambda-decomposition of HH", commutative_algebra, suite_lambda_hh_algebra, commutative_measuring, suite_lambda_hh},
      {"thm4.6", "lambda-decomposition of HC", commutative_algebra, suite_lambda_hc_algebra, commutative_measuring, suite_lambda_hc},
      {"cor4.7", "lambda-refined periodicity ladder", commutative_algebra, suite_lambda_sbi_algebra, commutative_measuring,
       suite_lambda_sbi},
      {"prop5.1", "CE coproduct", any_algebra, suite_ce_coproduct_algebra, any_measuring, suite_ce_coproduct},
      {"lem5.2", "theta and trace ladder", any_algebra, suite_theta_algebra, any_measuring, suite_theta},
      {"prop5.5", "Leibniz measuring", any_algebra, suite_cl_algebra, any_measuring, suite_cl},
      {"prop5.6", "iota/zeta squares", any_algebra, suite_v_algebra, any_measuring, suite_v},
      {"lem6.1", "coinvariant complexes", any_algebra, suite_coinv_algebra, any_measuring, suite_coinv},
      {"prop6.2", "CE-bar product measuring", nullptr, nullptr, any_measuring, suite_ce_product},
      {"prop6.5", "CL-bar product measuring", nullptr, nullptr, any_measuring, suite_cl_product},
      {"prop7.2", "dihedral maps", involutive_algebra, suite_dihedral_algebra, involutive_measuring, suite_dihedral},
      {"lem7.3", "sk/sp restriction", involutive_algebra, suite_restrict_algebra, involutive_measuring, suite_restrict},
      {"thm7.5", "sk/sp ladder", nullptr, nullptr, involutive_measuring, suite_ladder},
  };
  return all;
}

inline const Suite* find_suite(const std::string& id) {
  for (const auto& s : suites())
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace cyclo
