// Runs `csf expand` in both output formats over small grids and checks that
// each output parses back to the evaluator's value.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <json.hpp>

#include "csf/families.hpp"

namespace {

std::string run(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  return out;
}

std::string flags(const csf::FamilyParams& p) {
  std::string s = " --family " + p.family;
  if (!p.parts.empty()) {
    std::string parts;
    for (int x : p.parts.parts()) parts += (parts.empty() ? "" : ",") + std::to_string(x);
    s += " --parts=" + parts;
  }
  for (const auto& [name, v] : p.values) s += " --" + name + "=" + std::to_string(v);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: json_round_trip <csf executable>\n";
    return 2;
  }
  const std::string cli = argv[1];
  int checked = 0, bad = 0;
  for (const auto& f : csf::families()) {
    if (!f.has_formula) continue;
    for (const auto& p : csf::family_grid(f.tag, 6)) {
      const csf::ESymFunc want = csf::family_formula(p);
      const auto doc = nlohmann::json::parse(run(cli + " expand" + flags(p) + " --format json"));
      std::string text = run(cli + " expand" + flags(p));
      if (!text.empty() && text.back() == '\n') text.pop_back();
      if (csf::from_records(doc.at("terms")) != want || csf::parse_text(text) != want ||
          doc.at("order") != csf::family_order(p)) {
        std::cout << "MISMATCH " << f.tag << " " << p.describe() << '\n';
        ++bad;
      }
      ++checked;
    }
  }
  std::cout << checked << " expansions round-tripped, " << bad << " mismatches\n";
  return bad == 0 && checked > 0 ? 0 : 1;
}
