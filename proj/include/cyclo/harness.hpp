#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "suites.hpp"

namespace cyclo {

inline std::size_t thread_count() {
  if (const char* env = std::getenv("CYCLO_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/** Runs jobs on a small pool; results come back in job order. */
inline std::vector<Report> run_jobs(const std::vector<std::function<void(Report&)>>& jobs, std::size_t threads) {
  std::vector<Report> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) jobs[i](out[i]);
  };
  threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

struct VerifyOptions {
  std::string suite = "all";
  std::string measuring;
};

inline void guarded(Report& out, const std::string& suite, const std::string& anchor, const std::string& subject,
                    const std::function<void(Report&)>& body) {
  Report local;
  try {
    body(local);
  } catch (const TruncationTooLarge& e) {
    Recorder(local, suite, anchor, subject).skip("construction", "", e.what());
  } catch (const Error& e) {
    Recorder(local, suite, anchor, subject).fail("construction", "", e.what());
  }
  out.append(local);
}

inline Report run_verify(const Workspace& ws, Lab& lab, const VerifyOptions& opt, std::size_t threads = thread_count()) {
  std::vector<const Suite*> chosen;
  if (opt.suite == "all") {
    for (const auto& s : suites()) chosen.push_back(&s);
  } else {
    const Suite* s = find_suite(opt.suite);
    if (!s) throw ValidationError("unknown suite '" + opt.suite + "'");
    chosen.push_back(s);
  }
  std::vector<std::shared_ptr<const Algebra>> algebras = ws.algebras;
  std::vector<std::shared_ptr<const Measuring>> measurings = ws.measurings;
  if (!opt.measuring.empty()) {
    auto m = ws.measuring(opt.measuring);
    measurings = {m};
    algebras.clear();
    for (const auto& a : ws.algebras)
      if (a == m->source || a == m->target) algebras.push_back(a);
  }
  std::vector<std::function<void(Report&)>> jobs;
  for (const Suite* s : chosen) {
    if (s->algebra_run)
      for (const auto& a : algebras)
        if (s->algebra_pred(*a))
          jobs.push_back([&lab, s, a](Report& r) { guarded(r, s->id, s->title, a->name, [&](Report& o) { s->algebra_run(lab, a, o); }); });
    for (const auto& m : measurings)
      if (s->measuring_pred(*m))
        jobs.push_back([&lab, s, m](Report& r) { guarded(r, s->id, s->title, m->name, [&](Report& o) { s->measuring_run(lab, *m, o); }); });
  }
  Report all;
  for (const auto& r : run_jobs(jobs, threads)) all.append(r);
  return all;
}

// ---------------------------------------------------------------------------
// Compute tables

struct Table {
  std::string title;
  std::string note;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string num(std::size_t v) { return std::to_string(v); }

struct ComputeRequest {
  std::string kind;
  std::string algebra;
  std::string measuring;
  std::size_t max_degree = 0;  // 0 means the workspace default
  std::size_t r = 1;
};

inline std::vector<std::size_t> dims(const std::vector<Subquotient>& h) {
  std::vector<std::size_t> out;
  for (const auto& s : h) out.push_back(s.dim());
  return out;
}

inline Table dims_table(const std::string& title, const std::string& note, const std::vector<std::size_t>& d,
                        const std::vector<std::vector<std::size_t>>& ranks, const Measuring* m) {
  Table t{title, note, {"n", "dim"}, {}};
  if (m)
    for (Index x = 0; x < m->C().dim; ++x) t.header.push_back("rank at " + m->C().labels[x]);
  for (std::size_t n = 0; n < d.size(); ++n) {
    std::vector<std::string> row{num(n), num(d[n])};
    for (const auto& rk : ranks) row.push_back(num(rk[n]));
    t.rows.push_back(row);
  }
  return t;
}

inline std::vector<Table> run_compute(const Workspace& ws, Lab& lab, const ComputeRequest& req) {
  auto a = ws.algebra(req.algebra);
  std::shared_ptr<const Measuring> m;
  if (!req.measuring.empty()) {
    m = ws.measuring(req.measuring);
    if (m->source != a) throw ValidationError("measuring '" + m->name + "' does not start at algebra '" + a->name + "'");
  }
  const Caps& caps = lab.caps();
  const std::string& k = req.kind;
  bool lie_kind = k == "lie" || k == "leibniz";
  std::size_t N = req.max_degree ? req.max_degree : (lie_kind ? caps.max_lie_degree : k == "forms" ? caps.form_degree : caps.max_degree);
  auto per_x = [&](auto&& induced) {
    std::vector<std::vector<std::size_t>> out;
    if (m)
      for (Index x = 0; x < m->C().dim; ++x) out.push_back(induced(unit_vec(x)));
    return out;
  };
  std::string certified_single_note = "certified for n <= " + num(certified_single(N)) + " (built to degree " + num(N) + ")";
  std::string certified_total_note = "certified for n <= " + num(certified_total(N)) + " (built to degree " + num(N) + ")";

  if (k == "hh") {
    auto hh = lab.hh(a, N);
    auto ranks = per_x([&](const SparseVec& x) {
      auto hb = lab.hh(m->target, N);
      ChainMap f = hochschild_map(*m, x, N);
      std::vector<std::size_t> r;
      for (std::size_t n = 0; n < hh->size(); ++n) r.push_back(rank(induced_on_subquotient(f[n], (*hh)[n], (*hb)[n])));
      return r;
    });
    return {dims_table("HH_n(" + a->name + ")", certified_single_note, dims(*hh), ranks, m.get())};
  }
  if (k == "hc") {
    auto s = lab.sbi(a, N);
    auto ranks = per_x([&](const SparseVec& x) {
      auto ba = lab.bicomplex(a, N), bb = lab.bicomplex(m->target, N);
      auto sb = lab.sbi(m->target, N);
      ChainMap f = ba->tot_map(hochschild_map(*m, x, N), *bb);
      std::vector<std::size_t> r;
      for (std::size_t n = 0; n < s->hc.size(); ++n) r.push_back(rank(induced_on_subquotient(f[n], s->hc[n], sb->hc[n])));
      return r;
    });
    return {dims_table("HC_n(" + a->name + ")", certified_total_note, dims(s->hc), ranks, m.get())};
  }
  if (k == "hd") {
    require_involution(*a);
    auto dc = lab.dihedral(a, N);
    auto hd = dc->cc.homology_upto(certified_single(N));
    auto ranks = per_x([&](const SparseVec& x) {
      require_involutive_measuring(*m);
      auto db = lab.dihedral(m->target, N);
      auto hb = db->cc.homology_upto(certified_single(N));
      ChainMap f = dc->map(hochschild_map(*m, x, N), *db, "dihedral map");
      std::vector<std::size_t> r;
      for (std::size_t n = 0; n < hd.size(); ++n) r.push_back(rank(induced_on_subquotient(f[n], hd[n], hb[n])));
      return r;
    });
    return {dims_table("HD_n(" + a->name + ")", certified_single_note, dims(hd), ranks, m.get())};
  }
  if (k == "lambda") {
    auto eu = lab.eulerian(a, N);
    auto hh = lab.hh(a, N);
    auto nm = lab.normalized(a, N);
    auto hc = lab.normalized_tot(a, N)->homology_upto(certified_total(N));
    Table th{"HH_n^(i)(" + a->name + ")", certified_single_note, {"n", "dim"}, {}};
    Table tc{"HC_n^(i)(" + a->name + ")", certified_total_note, {"n", "dim"}, {}};
    for (std::size_t i = 0; i <= N; ++i) {
      th.header.push_back("i=" + num(i));
      tc.header.push_back("i=" + num(i));
    }
    for (std::size_t n = 0; n < hh->size(); ++n) {
      std::vector<std::string> row{num(n), num((*hh)[n].dim())};
      for (std::size_t i = 0; i <= N; ++i)
        row.push_back(num(rank(induced_on_subquotient(eu->on_hochschild(n, static_cast<long>(i)), (*hh)[n], (*hh)[n]))));
      th.rows.push_back(row);
    }
    for (std::size_t n = 0; n < hc.size(); ++n) {
      std::vector<std::string> row{num(n), num(hc[n].dim())};
      for (std::size_t i = 0; i <= N; ++i)
        row.push_back(num(rank(induced_on_subquotient(lambda_tot_projector(*nm, *eu, n, static_cast<long>(i)), hc[n], hc[n]))));
      tc.rows.push_back(row);
    }
    return {th, tc};
  }
  if (lie_kind) {
    std::size_t r = req.r;
    if (r < 1 || r > caps.max_matrix_size) throw ValidationError("matrix size r must be in 1.." + num(caps.max_matrix_size));
    std::vector<std::size_t> d;
    std::vector<std::vector<std::size_t>> ranks;
    std::string name;
    if (k == "lie") {
      auto ce = lab.ce(a, r, N);
      auto h = ce->cc.homology_upto(certified_single(N));
      d = dims(h);
      name = "H_n(gl_" + num(r) + "(" + a->name + "))";
      ranks = per_x([&](const SparseVec& x) {
        auto cb = lab.ce(m->target, r, N);
        auto hb = cb->cc.homology_upto(certified_single(N));
        ChainMap f = ce->map(gl_measuring(*m, r), x, *cb);
        std::vector<std::size_t> out;
        for (std::size_t n = 0; n < h.size(); ++n) out.push_back(rank(induced_on_subquotient(f[n], h[n], hb[n])));
        return out;
      });
    } else {
      auto cl = lab.cl(a, r, N);
      auto h = cl->cc.homology_upto(certified_single(N));
      d = dims(h);
      name = "HL_n(gl_" + num(r) + "(" + a->name + "))";
      ranks = per_x([&](const SparseVec& x) {
        auto cb = lab.cl(m->target, r, N);
        auto hb = cb->cc.homology_upto(certified_single(N));
        ChainMap f = cl->map(gl_measuring(*m, r), x);
        std::vector<std::size_t> out;
        for (std::size_t n = 0; n < h.size(); ++n) out.push_back(rank(induced_on_subquotient(f[n], h[n], hb[n])));
        return out;
      });
    }
    return {dims_table(name, certified_single_note, d, ranks, m.get())};
  }
  if (k == "forms") {
    auto f = lab.forms(a, N);
    Table t{"Omega^p(" + a->name + ") and HDR^p", "HDR certified for p <= " + num(N >= 1 ? N - 1 : 0), {"p", "dim Omega^p", "dim HDR^p"}, {}};
    for (std::size_t p = 0; p <= N; ++p) t.rows.push_back({num(p), num(f->dim(p)), p < N ? num(de_rham(*f, p).dim()) : "-"});
    return {t};
  }
  throw ValidationError("unknown compute kind '" + k + "'");
}

// ---------------------------------------------------------------------------
// Emitters

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

inline void write_table_md(std::ostream& os, const Table& t) {
  os << "### " << t.title << "\n\n";
  if (!t.note.empty()) os << t.note << "\n\n";
  auto row = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << md_escape(c) << " |";
    os << "\n";
  };
  row(t.header);
  os << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) row(r);
  os << "\n";
}

inline void write_report_md(std::ostream& os, const Report& rep, const std::vector<Table>& tables = {}) {
  os << "# Verification report\n\n";
  os << "pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail) << ", skipped-by-truncation "
     << rep.count(Status::Skipped) << "\n\n";
  std::vector<std::string> order;
  for (const auto& s : suites()) order.push_back(s.id);
  for (const auto& id : order) {
    std::vector<const CheckRecord*> rs;
    for (const auto& r : rep.records)
      if (r.suite == id) rs.push_back(&r);
    if (rs.empty()) continue;
    std::size_t p = 0, f = 0, s = 0;
    for (auto* r : rs) (r->status == Status::Pass ? p : r->status == Status::Fail ? f : s)++;
    os << "## " << id << ": " << rs.front()->anchor << "\n\n";
    os << "pass " << p << ", fail " << f << ", skipped-by-truncation " << s << "\n\n";
    os << "| check | subject | degrees | status | witness |\n|---|---|---|---|---|\n";
    for (auto* r : rs)
      os << "| " << md_escape(r->check) << " | " << md_escape(r->subject) << " | " << md_escape(r->degrees) << " | "
         << status_name(r->status) << " | " << md_escape(r->witness) << " |\n";
    os << "\n";
  }
  if (!tables.empty()) {
    os << "## Homology tables\n\n";
    for (const auto& t : tables) write_table_md(os, t);
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_report_csv(std::ostream& os, const Report& rep, const std::vector<Table>& tables = {}) {
  os << "suite,anchor,check,subject,degrees,status,witness\n";
  for (const auto& s : suites())
    for (const auto& r : rep.records)
      if (r.suite == s.id)
        os << csv_field(r.suite) << "," << csv_field(r.anchor) << "," << csv_field(r.check) << "," << csv_field(r.subject) << ","
           << csv_field(r.degrees) << "," << status_name(r.status) << "," << csv_field(r.witness) << "\n";
  for (const auto& t : tables)
    for (const auto& row : t.rows)
      for (std::size_t c = 1; c < row.size(); ++c)
        os << "table," << csv_field(t.title) << "," << csv_field(t.header[c]) << "," << csv_field(t.note) << ","
           << csv_field(t.header[0] + "=" + row[0]) << ",value," << csv_field(row[c]) << "\n";
}

/** Default homology tables for every algebra in the workspace. */
inline std::vector<Table> standard_tables(const Workspace& ws, Lab& lab) {
  std::vector<std::function<void(std::vector<Table>&)>> jobs;
  for (const auto& a : ws.algebras) {
    std::vector<std::string> kinds{"hh", "hc"};
    if (a->involution) kinds.push_back("hd");
    if (a->commutative) {
      kinds.push_back("lambda");
      kinds.push_back("forms");
    }
    for (const auto& k : kinds) jobs.push_back([&, a, k](std::vector<Table>& out) { out = run_compute(ws, lab, {k, a->name, "", 0, 1}); });
    for (std::size_t r = 1; r <= lab.caps().max_matrix_size; ++r)
      for (const char* k : {"lie", "leibniz"})
        jobs.push_back([&, a, r, k](std::vector<Table>& out) { out = run_compute(ws, lab, {k, a->name, "", 0, r}); });
  }
  std::vector<std::vector<Table>> res(jobs.size());
  std::vector<std::function<void(Report&)>> wrapped;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    wrapped.push_back([&, i](Report&) {
      try {
        jobs[i](res[i]);
      } catch (const TruncationTooLarge& e) {
        res[i] = {Table{"skipped", e.what(), {"reason"}, {{"skipped-by-truncation"}}}};
      }
    });
  run_jobs(wrapped, thread_count());
  std::vector<Table> out;
  for (auto& r : res) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace cyclo
