#pragma once

#include "json.hpp"

#include <string>
#include <utility>

namespace kxval {

using Json = nlohmann::json;

// Outcome of an executable check: a claim, a verdict, and enough recorded
// detail to recompute the verdict by hand.
struct Report {
  std::string claim;
  bool pass = true;
  Json details = Json::array();

  void note(Json item) { details.push_back(std::move(item)); }

  void check(bool ok, Json item) {
    if (!ok) pass = false;
    item["ok"] = ok;
    details.push_back(std::move(item));
  }

  void absorb(const Report& sub) {
    if (!sub.pass) pass = false;
    details.push_back(sub.to_json());
  }

  Json to_json() const {
    return Json{{"claim", claim},
                {"status", pass ? "pass" : "fail"},
                {"details", details}};
  }
};

} // namespace kxval
