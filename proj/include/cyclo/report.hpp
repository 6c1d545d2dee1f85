#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace cyclo {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skipped-by-truncation";
  }
}

struct CheckRecord {
  std::string suite;
  std::string anchor;
  std::string check;
  std::string subject;
  std::string degrees;
  Status status = Status::Pass;
  std::string witness;
};

class Report {
 public:
  std::vector<CheckRecord> records;

  bool ok() const {
    for (const auto& r : records)
      if (r.status == Status::Fail) return false;
    return true;
  }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.status == s;
    return n;
  }

  void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }
};

/** \brief Records checks for one suite and one subject. */
class Recorder {
 public:
  Recorder(Report& r, std::string suite, std::string anchor, std::string subject)
      : r_(r), suite_(std::move(suite)), anchor_(std::move(anchor)), subject_(std::move(subject)) {}

  void expect(const std::string& check, const std::string& degrees, bool ok, const std::string& witness = "") {
    r_.records.push_back({suite_, anchor_, check, subject_, degrees, ok ? Status::Pass : Status::Fail,
                          ok ? "" : (witness.empty() ? "condition false" : witness)});
  }

  bool equal(const std::string& check, const std::string& degrees, const Matrix& lhs, const Matrix& rhs) {
    auto mm = first_mismatch(lhs, rhs);
    std::string w;
    if (mm) {
      if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        std::ostringstream os;
        os << "shape " << lhs.rows() << "x" << lhs.cols() << " vs " << rhs.rows() << "x" << rhs.cols();
        w = os.str();
      } else {
        w = mm->describe();
      }
    }
    expect(check, degrees, !mm, w);
    return !mm;
  }

  bool zero(const std::string& check, const std::string& degrees, const Matrix& m) {
    return equal(check, degrees, m, Matrix(m.rows(), m.cols()));
  }

  void skip(const std::string& check, const std::string& degrees, const std::string& why) {
    r_.records.push_back({suite_, anchor_, check, subject_, degrees, Status::Skipped, why});
  }

  void fail(const std::string& check, const std::string& degrees, const std::string& why) {
    r_.records.push_back({suite_, anchor_, check, subject_, degrees, Status::Fail, why});
  }

  const std::string& subject() const { return subject_; }

 private:
  Report& r_;
  std::string suite_, anchor_, subject_;
};

}  // namespace cyclo
