#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rscheck {

enum class Status { Pass, Fail, IllPosed, Inconclusive };

std::string_view to_string(Status s);
/// Inverse of to_string; nullopt for unknown text.
std::optional<Status> parse_status(std::string_view text);

/// Outcome of one verification instance.
///
/// Invariants: a Fail carries a witness, an IllPosed carries a note naming
/// the error that made the instance ill-posed.
struct CheckResult {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
  std::string modulus;
  std::optional<std::string> witness;
  std::optional<std::string> note;

  bool passed() const { return status == Status::Pass; }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Accumulates named sub-claims of one instance into a single CheckResult.
///
/// The first failing claim supplies lhs/rhs/modulus and the witness; when all
/// pass, the renderings of every claim are joined with "; ".
class ClaimSet {
 public:
  ClaimSet(std::string family, std::vector<std::pair<std::string, std::string>> params);

  void claim(std::string_view label, bool ok, std::string lhs, std::string rhs, std::string modulus = "");
  void ill_posed(std::string_view label, std::string_view what);
  void note(std::string_view text);

  bool ok() const { return status_ == Status::Pass; }
  CheckResult finish() &&;

 private:
  CheckResult result_;
  Status status_ = Status::Pass;
  std::vector<std::string> lhs_, rhs_, mod_;
  std::vector<std::string> notes_;
};

}  // namespace rscheck
