#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "frozen.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cyclo;
using cyclo::test::corpus;
using cyclo::test::dims_of;
using cyclo::test::fixture;

namespace {

int failures = 0;

void line(const std::string& criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << criterion << ": " << detail << "\n";
  if (!ok) ++failures;
}

std::string counts(const Report& r) {
  return "pass " + std::to_string(r.count(Status::Pass)) + ", fail " + std::to_string(r.count(Status::Fail)) +
         ", skipped " + std::to_string(r.count(Status::Skipped));
}

Report filter(const Report& r, const std::function<bool(const CheckRecord&)>& keep) {
  Report out;
  for (const auto& rec : r.records)
    if (keep(rec)) out.records.push_back(rec);
  return out;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string md(const Report& r) {
  std::ostringstream os;
  write_report_md(os, r);
  return os.str();
}

bool rejected(const std::string& file, std::string& why) {
  try {
    load_workspace(fixture(file));
  } catch (const ValidationError& e) {
    why = e.what();
    return true;
  }
  return false;
}

}  // namespace

int main() {
  const Workspace& ws = corpus();
  auto start = std::chrono::steady_clock::now();
  Lab lab(ws.caps);
  Report all = run_verify(ws, lab, {}, 1);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Report structural = filter(all, [](const CheckRecord& r) {
    return contains(r.check, "^2 = 0") || contains(r.check, "bB + Bb") || contains(r.check, "t^{n+1}") ||
           contains(r.check, "dihedral group relations") || (r.suite == "prop2.2" && r.subject.find('[') == std::string::npos) ||
           contains(r.check, "Jacobi") || contains(r.check, "Leibniz identity");
  });
  line("structural identities", structural.ok() && structural.count(Status::Pass) > 500 && secs < 300,
       counts(structural) + ", verify all in " + std::to_string(static_cast<int>(secs + 0.5)) + "s");

  {
    Lab l(ws.caps);
    auto q = ws.algebra("Q");
    auto ctM = l.ctilde(l.matrix(q, 2), 2), ctQ = l.ctilde(q, 2);
    Matrix tr = induced_on_subquotient(descend(trace_map(1, 2, 0), ctM->q[0], ctQ->q[0], "trace"), ctM->cc.homology(0),
                                       ctQ->cc.homology(0));
    auto hh = dims_of(*l.hh(ws.algebra("dualnum"), 4));
    auto hc = dims_of(l.sbi(q, 5)->hc);
    std::size_t o1 = l.forms(ws.algebra("dualnum"), 3)->dim(1), o3 = l.forms(ws.algebra("trunc3"), 3)->dim(1);
    bool oracle_ok = oracle::hh_dims(oracle::truncated_poly(2), 3) == frozen::hh_dualnum &&
                     oracle::hc_dims(oracle::truncated_poly(1), 3) == frozen::hc_q &&
                     oracle::omega1_dim(oracle::truncated_poly(2)) == frozen::omega1_dualnum &&
                     oracle::omega1_dim(oracle::truncated_poly(3)) == frozen::omega1_trunc3 &&
                     oracle::hc0_trace(2) == std::make_pair(frozen::hc0_m2, frozen::trace_rank_m2);
    bool lib_ok = hh == frozen::hh_dualnum && hc == frozen::hc_q && o1 == frozen::omega1_dualnum && o3 == frozen::omega1_trunc3 &&
                  tr.rows() == 1 && tr.cols() == 1 && rank(tr) == 1;
    std::ostringstream d;
    d << "HH(dualnum)=";
    for (auto x : hh) d << x;
    d << " HC(Q)=";
    for (auto x : hc) d << x;
    d << " Omega1=" << o1 << "," << o3 << " HC0 trace rank " << rank(tr) << " on " << tr.cols() << "x" << tr.rows()
      << (oracle_ok ? ", oracle agrees" : ", oracle disagrees");
    line("oracle regressions", oracle_ok && lib_ok, d.str());
  }

  Report routes = filter(all, [](const CheckRecord& r) {
    return r.suite == "prop3.1" && (contains(r.check, "HC dims agree") || contains(r.check, "iso on homology"));
  });
  std::set<std::string> route_subjects;
  for (const auto& r : routes.records) route_subjects.insert(r.subject);
  line("three-route agreement", routes.ok() && route_subjects.size() == ws.algebras.size(),
       counts(routes) + " over " + std::to_string(route_subjects.size()) + " algebras");

  Report euler = filter(all, [](const CheckRecord& r) {
    return r.suite == "lem4.3" || r.suite == "thm4.4" || r.suite == "thm4.6" || r.suite == "cor4.7";
  });
  line("Eulerian suite", euler.ok() && euler.count(Status::Pass) > 0, counts(euler));

  {
    std::string missing;
    for (const auto& s : suites()) {
      Report one = filter(all, [&](const CheckRecord& r) { return r.suite == s.id; });
      if (!one.ok() || one.count(Status::Pass) == 0) missing += " " + s.id;
    }
    line("diagram ledger", all.ok() && missing.empty(),
         counts(all) + " across " + std::to_string(suites().size()) + " suites" + (missing.empty() ? "" : "; failing:" + missing));
  }

  {
    std::string w1, w2, w3;
    bool a = rejected("broken_assoc.json", w1), b = rejected("noncocommutative.json", w2),
         c = rejected("involution_violation.json", w3);
    Measuring bad = *ws.measuring("idOnDualnum");
    SparseVec col = bad.phi[0].col(1);
    col.insert(col.begin(), {0, Rational(1)});
    bad.phi[0].set_col(1, col);
    Report r;
    suite_star(lab, bad, r);
    std::string witness;
    for (const auto& rec : r.records)
      if (rec.status == Status::Fail && witness.empty()) witness = rec.check + " " + rec.degrees + ": " + rec.witness;
    line("negative controls", a && b && c && !r.ok() && !witness.empty(),
         "associativity [" + w1 + "]; cocommutativity [" + w2 + "]; involution [" + w3 + "]; corrupted measuring [" + witness + "]");
  }

  {
    Lab l2(ws.caps);
    Report again = run_verify(ws, l2, {}, 3);
    std::string a = md(all), b = md(again);
    line("determinism", a == b, "verify all with 1 and 3 threads: " + std::to_string(a.size()) + " bytes, " +
                                    (a == b ? "identical" : "different"));
  }

  return failures == 0 ? 0 : 1;
}
