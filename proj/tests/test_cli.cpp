#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "gauss/cubic_graph.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = gauss::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Re-emitting parsed JSON must reproduce the original bytes.
void check_round_trip(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "AEBACBDCED", "--json"});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["realizable"] == false);
  CHECK(j["parity"] == true);
  CHECK(j["consistent"] == true);
  CHECK(j["min_genus"] == 1);
  CHECK(j["interlacement_degrees"] == nlohmann::json({2, 2, 2, 2, 2}));

  r = run({"analyze", "ADBECADBEC", "--json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["realizable"] == true);
  CHECK(j["face_degree_multisets"] == nlohmann::json({{2, 2, 2, 2, 2, 5, 5}}));
  CHECK(j["realizations"].size() == 2);
  CHECK(j["realizations"][0]["faces"].size() == 7);

  r = run({"analyze", "0-5,1-4,2-7,3-8,6-9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("realizable:            yes") != std::string::npos);

  r = run({"analyze", "ABAB", "--dot"});
  CHECK(r.out.find("A -- B;") != std::string::npos);

  CHECK(run({"analyze", "ABA"}).code == 2);
  CHECK(run({"analyze", "0-1,1-2"}).code == 2);
}

TEST_CASE("check exit codes") {
  auto r = run({"check", "AA"});
  CHECK(r.code == 0);
  CHECK(r.out == "realizable\n");
  r = run({"check", "ABAB"});
  CHECK(r.code == 1);
  CHECK(r.out == "unrealizable (min genus 1)\n");
  r = run({"check", "A B A"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'B'") != std::string::npos);
  CHECK(run({"check"}).code == 2);
}

TEST_CASE("graph hamcycles, census, iso") {
  auto r = run({"graph", "hamcycles", "mobius:3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 1 2 3 4 5\n") == 0);

  r = run({"graph", "census", "mobius:5", "--json"});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_cycles"] == 8);
  bool yes = false;
  bool no = false;
  for (const auto& c : j["classes"]) (c["realizable"].get<bool>() ? yes : no) = true;
  CHECK(yes);
  CHECK(no);

  r = run({"graph", "census", "mobius:5", "--csv"});
  CHECK(r.out.find("canonical,cycles,realizable,min_genus,example_cycle\n") == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  const auto trap = gauss::graph_from_diagram(gauss::parse_word("AEBACBDCED")).graph;
  const auto path = temp_file("gaussdiag_trap.edges", trap.to_edge_list());
  r = run({"graph", "iso", "mobius:5", path, "--json"});
  CHECK(r.code == 0);
  const auto iso = nlohmann::json::parse(r.out);
  CHECK(iso["isomorphic"] == true);
  CHECK(gauss::verify_isomorphism(gauss::moebius_ladder(5), trap, iso["witness"].get<std::vector<int>>()));

  r = run({"graph", "iso", "mobius:5", "mobius:4"});
  CHECK(r.out == "not isomorphic\n");

  r = run({"graph", "edges", "diagram:AA"});
  CHECK(r.out == "0 1\n0 1\n0 1\n");

  r = run({"graph", "hamcycles", temp_file("gaussdiag_bad.edges", "0 1\n1 2\n2 0\n")});
  CHECK(r.code == 2);
  CHECK(r.err.find("degree 2") != std::string::npos);
  CHECK(run({"graph", "hamcycles", "/nonexistent/file"}).code == 2);
  CHECK(run({"graph", "census", "mobius:2"}).code == 2);
}

TEST_CASE("flips") {
  auto r = run({"flips", "ADBECADBEC", "--json"});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  const auto j = nlohmann::json::parse(r.out);
  const auto neighbour = gauss::canonical_form(gauss::parse_word("ACDECABDEB")).text();
  bool linked = false;
  for (const auto& f : j["flips"]) linked = linked || f["canonical"] == neighbour;
  CHECK(linked);

  r = run({"flips", "--orbit", "AEBACBDCED", "--json"});
  const auto o = nlohmann::json::parse(r.out);
  for (const auto& m : o["members"]) CHECK(m["realizable"] == false);

  r = run({"flips", "AABB"});
  CHECK(r.out == "# 0 flip sites\n");
  CHECK(run({"flips", "AB"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--chords", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "AABB\trealizable\nABAB\tunrealizable\n# 2 shown, 2 classes, 1 realizable\n");
  r = run({"enumerate", "--chords", "3", "--realizable-only", "--json"});
  check_round_trip(r.out);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 5);
  CHECK(j["diagrams"].size() == 3);
  r = run({"enumerate", "--chords", "1"});
  CHECK(r.out.find("AA\trealizable\n") == 0);
  CHECK(run({"enumerate", "--chords", "0"}).code == 2);
  CHECK(run({"enumerate", "--chords", "9"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-chords", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 counterexamples") != std::string::npos);
  CHECK(run({"verify", "--max-chords", "1"}).code == 2);
  CHECK(run({"verify", "--max-chords", "7"}).code == 2);

  const auto one = run({"verify", "--max-chords", "6", "--json", "--threads", "1"});
  const auto many = run({"verify", "--max-chords", "6", "--json", "--threads", "8"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  check_round_trip(one.out);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["max_n"] == 6);
  CHECK(j["counterexamples"].empty());
  CHECK(j["diagrams_checked"] == 658);
}

TEST_CASE("help and unknown input") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "AA", "--bogus"}).code == 2);
}
