#include "rscheck/check_result.hpp"

namespace rscheck {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::IllPosed: return "ILL_POSED";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

std::optional<Status> parse_status(std::string_view text) {
  if (text == "PASS") return Status::Pass;
  if (text == "FAIL") return Status::Fail;
  if (text == "ILL_POSED") return Status::IllPosed;
  if (text == "INCONCLUSIVE") return Status::Inconclusive;
  return std::nullopt;
}

ClaimSet::ClaimSet(std::string family, std::vector<std::pair<std::string, std::string>> params) {
  result_.family = std::move(family);
  result_.params = std::move(params);
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string labelled(std::string_view label, const std::string& v) {
  if (label.empty()) return v;
  return std::string(label) + ": " + v;
}

}  // namespace

void ClaimSet::claim(std::string_view label, bool ok, std::string lhs, std::string rhs, std::string modulus) {
  if (status_ != Status::Pass) return;
  if (!ok) {
    status_ = Status::Fail;
    result_.lhs = std::move(lhs);
    result_.rhs = std::move(rhs);
    result_.modulus = std::move(modulus);
    result_.witness = std::string(label.empty() ? "claim" : label) + " violated: " + result_.lhs + " vs " +
                      result_.rhs + (result_.modulus.empty() ? "" : " mod " + result_.modulus);
    return;
  }
  lhs_.push_back(labelled(label, lhs));
  rhs_.push_back(labelled(label, rhs));
  if (!modulus.empty()) mod_.push_back(labelled(label, modulus));
}

void ClaimSet::ill_posed(std::string_view label, std::string_view what) {
  if (status_ != Status::Pass) return;
  status_ = Status::IllPosed;
  notes_.push_back(std::string(label) + ": " + std::string(what));
}

void ClaimSet::note(std::string_view text) { notes_.emplace_back(text); }

CheckResult ClaimSet::finish() && {
  result_.status = status_;
  if (status_ == Status::Pass) {
    result_.lhs = join(lhs_);
    result_.rhs = join(rhs_);
    result_.modulus = join(mod_);
  }
  if (!notes_.empty()) result_.note = join(notes_);
  return std::move(result_);
}

}  // namespace rscheck
