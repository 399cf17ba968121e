#ifndef PINGPONG_REPORT_HPP_
#define PINGPONG_REPORT_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pingpong {

  //! One evaluated clause. A failed clause carries a witness: the offending
  //! set in canonical text form, or the offending word.
  struct Check {
    std::string name;
    bool        passed;
    std::string witness;
  };

  //! Ordered list of evaluated clauses with an overall verdict.
  class Report {
   public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    void add(std::string name, bool passed, std::string witness = {}) {
      if (!passed && witness.empty()) {
        witness = "(clause does not hold)";
      }
      checks_.push_back({std::move(name), passed, std::move(witness)});
    }
    void append(const Report& other) {
      checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    bool passed() const {
      return std::all_of(checks_.begin(), checks_.end(),
                         [](Check const& c) { return c.passed; });
    }
    const std::string& title() const noexcept {
      return title_;
    }
    const std::vector<Check>& checks() const noexcept {
      return checks_;
    }
    std::vector<Check> failures() const {
      std::vector<Check> out;
      std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                   [](Check const& c) { return !c.passed; });
      return out;
    }

    //! Title, one line per check, then the verdict. Failed checks are
    //! followed by an indented witness line.
    std::string str() const {
      std::string out;
      if (!title_.empty()) {
        out += title_ + "\n";
      }
      for (auto const& c : checks_) {
        out += (c.passed ? "  [pass] " : "  [FAIL] ") + c.name + "\n";
        if (!c.passed) {
          out += "         witness: " + c.witness + "\n";
        }
      }
      out += passed() ? "verdict: pass\n" : "verdict: fail\n";
      return out;
    }

   private:
    std::string        title_;
    std::vector<Check> checks_;
  };

}  // namespace pingpong

#endif  // PINGPONG_REPORT_HPP_
