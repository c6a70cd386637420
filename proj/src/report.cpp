#include "polylaw/report.hpp"

#include <json.hpp>
#include <sstream>

namespace polylaw::report {

namespace {

Report::TagStat& stat_for(Report& r, const std::string& tag) {
  for (auto& s : r.stats)
    if (s.tag == tag) return s;
  r.stats.push_back({tag, 0, 0});
  return r.stats.back();
}

}  // namespace

void Report::pass(const std::string& tag) { ++stat_for(*this, tag).checked; }

void Report::fail(const std::string& tag, const std::string& witness) {
  auto& s = stat_for(*this, tag);
  ++s.checked;
  ++s.failed;
  if (violations.size() < witness_cap) violations.push_back({tag, witness});
}

void Report::check(const std::string& tag, bool ok, const std::string& witness) {
  if (ok)
    pass(tag);
  else
    fail(tag, witness);
}

void Report::merge(const Report& other) {
  for (const auto& s : other.stats) {
    auto& mine = stat_for(*this, s.tag);
    mine.checked += s.checked;
    mine.failed += s.failed;
  }
  for (const auto& v : other.violations)
    if (violations.size() < witness_cap) violations.push_back(v);
}

bool Report::clean() const {
  for (const auto& s : stats)
    if (s.failed > 0) return false;
  return true;
}

long long Report::total_checked() const {
  long long t = 0;
  for (const auto& s : stats) t += s.checked;
  return t;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& s : stats)
    out << (s.failed == 0 ? "PASS" : "FAIL") << ' ' << s.tag << " checked="
        << s.checked << " failed=" << s.failed << '\n';
  for (const auto& v : violations)
    out << "witness " << v.tag << ": " << v.witness << '\n';
  out << (clean() ? "CLEAN" : "VIOLATIONS") << '\n';
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["clean"] = clean();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& s : stats) {
    nlohmann::ordered_json c;
    c["tag"] = s.tag;
    c["checked"] = s.checked;
    c["failed"] = s.failed;
    j["checks"].push_back(c);
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json w;
    w["tag"] = v.tag;
    w["witness"] = v.witness;
    j["witnesses"].push_back(w);
  }
  return j.dump(2);
}

}  // namespace polylaw::report
