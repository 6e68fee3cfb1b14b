#include <fstream>
#include <sstream>

#include "doctest.h"
#include "skein/diagram.hpp"

using namespace skein;

namespace {

PuncturedDiagram fixture(const std::string& name) {
  return load_diagram(std::string(SKEIN_FIXTURES) + "/" + name + ".diag");
}

std::string read_text(const std::string& name) {
  std::ifstream f(std::string(SKEIN_FIXTURES) + "/" + name + ".diag");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kAll[] = {"e1", "e2", "e5", "e6", "e6_same_over", "trefoil", "unknot", "kinked_unknot",
                      "figure_eight_annulus"};

std::string error_of(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const DiagramError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixtures parse and round trip") {
  for (const char* name : kAll) {
    CAPTURE(name);
    PuncturedDiagram d = fixture(name);
    std::string s = serialize(d);
    PuncturedDiagram again = parse_diagram(s);
    CHECK(again == d);
    CHECK(serialize(again) == s);
  }
  PuncturedDiagram e6 = fixture("e6");
  CHECK(e6.crossing_count() == 2);
  CHECK(e6.pieces().size() == 1);
  CHECK(e6.puncture_count() == 2);
}

TEST_CASE("parse errors name the offending element") {
  std::string e6 = read_text("e6");
  std::string twice = e6;
  twice.replace(twice.find("E(1, 0.1, 1.0)"), 14, "E(1, 0.0, 1.0)");
  CHECK(error_of(twice).find("slot conflict") != std::string::npos);

  std::string face = e6;
  face.replace(face.find("face 0.2"), 8, "face 7.2");
  CHECK(error_of(face).find("unknown face 7.2") != std::string::npos);

  std::string missing = e6;
  missing.erase(missing.find("E(3, 0.3, 1.2)"), 15);
  CHECK(error_of(missing).find("dangling arc 3") != std::string::npos);

  std::string count = e6;
  count.replace(count.find("genus 1"), 7, "genus 2");
  CHECK(error_of(count).find("expected 3 punctures") != std::string::npos);

  std::string loops = read_text("e2");
  loops.replace(loops.find("P(O1, O0, face in, side out)"), 28, "P(O1, O0, face in, side out)\nP(O0, O1, face in, side out)");
  CHECK(error_of(loops).find("nesting cycle") != std::string::npos);

  CHECK(error_of("skein-diagram 1\ngenus 0\nfoo\n").find("unrecognized line") != std::string::npos);
  CHECK_THROWS_AS(load_diagram("/nonexistent.diag"), DiagramError);

  // Non-planar rotation: two crossings joined as a twisted 4-cycle have the wrong face count.
  std::string bad =
      "skein-diagram 1\ngenus 0\nX(0, [0, 1, 2, 3], over: 0)\nX(1, [0, 1, 2, 3], over: 0)\n"
      "E(0, 0.0, 1.0)\nE(1, 0.1, 1.1)\nE(2, 0.2, 1.2)\nE(3, 0.3, 1.3)\nP(puncture 0, C0, face 0.0)\n";
  CHECK(error_of(bad).find("not planar") != std::string::npos);
}

TEST_CASE("faces") {
  FaceStructure e6 = faces(fixture("e6"));
  REQUIRE(e6.faces.size() == 4);
  int external = 0;
  for (const auto& f : e6.faces) external += f.external;
  CHECK(external == 2);
  CHECK(e6.faces[0].punctures == std::vector<int>{0});  // face 0.0
  CHECK(e6.faces[2].punctures == std::vector<int>{1});  // face 0.2

  FaceStructure e1 = faces(fixture("e1"));
  REQUIRE(e1.faces.size() == 2);
  CHECK(e1.faces[0].external);
  CHECK(e1.faces[1].external);

  FaceStructure t = faces(fixture("trefoil"));
  CHECK(t.faces.size() == 5);
  int t_ext = 0;
  for (const auto& f : t.faces) t_ext += f.external;
  CHECK(t_ext == 1);

  CHECK(faces(fixture("e5")).faces.size() == 4);
  CHECK(faces(PuncturedDiagram(DiagramData{3, {}, 0, {}, {}})).faces.size() == 1);
}

TEST_CASE("alternating and connected") {
  CHECK(is_alternating(fixture("trefoil")));
  CHECK(is_alternating(fixture("e6")));
  CHECK_FALSE(is_alternating(fixture("e6_same_over")));
  CHECK(is_alternating(fixture("e5")));
  CHECK(is_connected(fixture("trefoil")));
  CHECK(is_connected(fixture("e6")));
  CHECK_FALSE(is_connected(fixture("e5")));
  CHECK_FALSE(is_connected(PuncturedDiagram()));
}

TEST_CASE("z2 class and diagram genus") {
  CHECK(z2_class(fixture("e1")).to_string() == "{p1}");
  CHECK(z2_class(fixture("e5")).trivial());
  CHECK(z2_class(fixture("e2")).trivial());
  CHECK(z2_class(fixture("e6")).trivial());
  CHECK(z2_class(fixture("trefoil")).trivial());
  CHECK(z2_class(fixture("figure_eight_annulus")).trivial());
  CHECK(diagram_genus(fixture("e5")) == 2);
  CHECK(diagram_genus(fixture("e1")) == 1);
  CHECK(diagram_genus(PuncturedDiagram(DiagramData{4, {}, 0, {}, {}})) == 0);
}

TEST_CASE("simplicity") {
  SimplicityReport kink = simplicity_report(fixture("kinked_unknot"));
  CHECK(kink.nugatory == std::vector<int>{0});
  CHECK_FALSE(kink.simple);

  SimplicityReport e6 = simplicity_report(fixture("e6"));
  CHECK(e6.k == 2);
  CHECK(e6.nugatory.empty());
  CHECK_FALSE(e6.simple);

  SimplicityReport t = simplicity_report(fixture("trefoil"));
  CHECK(t.simple);
  CHECK(t.k == 0);

  SimplicityReport f8 = simplicity_report(fixture("figure_eight_annulus"));
  CHECK(f8.nugatory.empty());
  CHECK(f8.k == 1);
}
