#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "skein/diagram.hpp"

namespace skein {

namespace {

constexpr const char* kHeader = "skein-diagram 1";

[[noreturn]] void fail(int line, const std::string& msg) {
  throw DiagramError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct RawX {
  int line;
  std::array<int, 4> arcs;
  int over;
};

struct RawP {
  int line;
  bool puncture;
  int puncture_index;
  std::string piece, host, face, side;
};

}  // namespace

PuncturedDiagram parse_diagram(std::string_view text) {
  static const std::regex re_genus(R"(genus\s+(\d+))");
  static const std::regex re_x(R"(X\(\s*(\d+)\s*,\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*,\s*over:\s*(\d+)\s*\))");
  static const std::regex re_e(R"(E\(\s*(\d+)\s*,\s*(\d+)\.(\d+)\s*,\s*(\d+)\.(\d+)\s*\))");
  static const std::regex re_o(R"(O\(\s*(\d+)\s*\))");
  static const std::regex re_pp(R"(P\(\s*puncture\s+(\d+)\s*,\s*([CO]\d+)\s*,\s*face\s+([\w.]+)\s*\))");
  static const std::regex re_pq(
      R"(P\(\s*([CO]\d+)\s*,\s*([CO]\d+)\s*,\s*face\s+([\w.]+)\s*,\s*side\s+([\w.]+)\s*\))");

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool header = false;
  int genus = -1;
  std::map<int, RawX> xs;
  struct RawE { int line; int a, c1, s1, c2, s2; };
  std::vector<RawE> es;
  std::map<int, int> loops;  // file id -> line
  std::vector<RawP> ps;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::smatch m;
    if (!header) {
      if (line != kHeader) fail(line_no, "expected header '" + std::string(kHeader) + "'");
      header = true;
    } else if (std::regex_match(line, m, re_genus)) {
      if (genus >= 0) fail(line_no, "duplicate genus line");
      genus = std::stoi(m[1]);
    } else if (std::regex_match(line, m, re_x)) {
      int id = std::stoi(m[1]);
      if (xs.count(id)) fail(line_no, "duplicate crossing " + std::to_string(id));
      int over = std::stoi(m[6]);
      if (over > 1) fail(line_no, "crossing " + std::to_string(id) + ": over must be 0 or 1");
      xs[id] = {line_no, {std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), std::stoi(m[5])}, over};
    } else if (std::regex_match(line, m, re_e)) {
      es.push_back({line_no, std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), std::stoi(m[5])});
    } else if (std::regex_match(line, m, re_o)) {
      int id = std::stoi(m[1]);
      if (loops.count(id)) fail(line_no, "duplicate loop " + std::to_string(id));
      loops[id] = line_no;
    } else if (std::regex_match(line, m, re_pp)) {
      ps.push_back({line_no, true, std::stoi(m[1]), m[2], "", m[3], ""});
    } else if (std::regex_match(line, m, re_pq)) {
      ps.push_back({line_no, false, -1, m[1], m[2], m[3], m[4]});
    } else {
      fail(line_no, "unrecognized line: " + line);
    }
  }
  if (!header) throw DiagramError("missing header");
  if (genus < 0) throw DiagramError("missing genus line");

  DiagramData data;
  data.genus = genus;
  std::map<int, int> cindex, lindex;
  for (const auto& [id, x] : xs) cindex[id] = static_cast<int>(cindex.size());
  for (const auto& [id, l] : loops) lindex[id] = static_cast<int>(lindex.size());
  data.crossings.resize(xs.size());
  data.loops = static_cast<int>(loops.size());

  std::vector<std::array<int, 4>> filled(xs.size(), {-1, -1, -1, -1});
  std::map<int, int> arc_seen;
  for (const auto& e : es) {
    if (arc_seen.count(e.a)) fail(e.line, "duplicate arc " + std::to_string(e.a));
    arc_seen[e.a] = e.line;
    const std::pair<int, int> ends[2] = {{e.c1, e.s1}, {e.c2, e.s2}};
    for (const auto& [c, s] : ends) {
      if (!cindex.count(c)) fail(e.line, "arc " + std::to_string(e.a) + " references unknown crossing " + std::to_string(c));
      if (s > 3) fail(e.line, "arc " + std::to_string(e.a) + " references slot " + std::to_string(s));
      const int ci = cindex[c];
      const std::string where = std::to_string(c) + "." + std::to_string(s);
      if (filled[ci][s] >= 0) fail(e.line, "slot conflict at " + where + ": arcs " + std::to_string(filled[ci][s]) + " and " + std::to_string(e.a));
      if (xs[c].arcs[s] != e.a)
        fail(e.line, "slot conflict at " + where + ": crossing lists arc " + std::to_string(xs[c].arcs[s]) + ", arc line says " + std::to_string(e.a));
      filled[ci][s] = e.a;
    }
    if (e.c1 == e.c2 && e.s1 == e.s2) fail(e.line, "arc " + std::to_string(e.a) + " joins a slot to itself");
    data.crossings[cindex[e.c1]].link[e.s1] = {cindex[e.c2], e.s2};
    data.crossings[cindex[e.c2]].link[e.s2] = {cindex[e.c1], e.s1};
  }
  for (const auto& [id, x] : xs) {
    for (int s = 0; s < 4; ++s)
      if (filled[cindex[id]][s] < 0) fail(x.line, "dangling arc " + std::to_string(x.arcs[s]) + " at slot " + std::to_string(id) + "." + std::to_string(s));
    data.crossings[cindex[id]].over = x.over;
  }

  // Component label of each crossing, for checking that named faces belong to the named piece.
  std::vector<int> comp(data.crossings.size(), -1);
  for (size_t c = 0; c < comp.size(); ++c) {
    if (comp[c] >= 0) continue;
    std::vector<int> stack{static_cast<int>(c)};
    comp[c] = static_cast<int>(c);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& t : data.crossings[x].link)
        if (comp[t.crossing] < 0) {
          comp[t.crossing] = static_cast<int>(c);
          stack.push_back(t.crossing);
        }
    }
  }

  struct PieceRef { bool loop; int index; };
  auto piece_ref = [&](const std::string& name, int line) -> PieceRef {
    int id = std::stoi(name.substr(1));
    if (name[0] == 'C') {
      if (!cindex.count(id)) fail(line, "unknown piece " + name);
      return {false, cindex[id]};
    }
    if (!lindex.count(id)) fail(line, "unknown piece " + name);
    return {true, lindex[id]};
  };
  auto face_ref = [&](const PieceRef& p, const std::string& face, int line, const std::string& piece) -> Anchor {
    if (p.loop) {
      if (face == "in") return Anchor::loop(p.index, 0);
      if (face == "out") return Anchor::loop(p.index, 1);
      fail(line, "unknown face " + face + " of loop piece " + piece);
    }
    auto dot = face.find('.');
    if (dot == std::string::npos) fail(line, "unknown face " + face + " of piece " + piece);
    int c = std::stoi(face.substr(0, dot)), i = std::stoi(face.substr(dot + 1));
    if (!cindex.count(c) || i > 3 || comp[cindex[c]] != comp[p.index])
      fail(line, "unknown face " + face + " of piece " + piece);
    return Anchor::corner(cindex[c], i);
  };

  std::vector<std::pair<int, Anchor>> punctures;
  std::vector<std::pair<int, Placement>> placements;
  for (const auto& p : ps) {
    if (p.puncture) {
      PieceRef host = piece_ref(p.piece, p.line);
      punctures.push_back({p.puncture_index, face_ref(host, p.face, p.line, p.piece)});
    } else {
      PieceRef own = piece_ref(p.piece, p.line);
      PieceRef host = piece_ref(p.host, p.line);
      placements.push_back({p.line, {face_ref(own, p.side, p.line, p.piece), face_ref(host, p.face, p.line, p.host)}});
    }
  }
  std::sort(punctures.begin(), punctures.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < punctures.size(); ++i)
    if (punctures[i].first != static_cast<int>(i))
      throw DiagramError("expected " + std::to_string(genus + 1) + " punctures numbered from 0, found puncture " +
                         std::to_string(punctures[i].first) + (i > 0 && punctures[i].first == punctures[i - 1].first ? " twice" : " out of order"));
  for (const auto& [i, a] : punctures) data.punctures.push_back(a);
  for (const auto& [line, pl] : placements) data.placements.push_back(pl);
  return PuncturedDiagram(std::move(data));
}

PuncturedDiagram load_diagram(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DiagramError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

std::string serialize(const PuncturedDiagram& d) {
  std::ostringstream out;
  out << kHeader << "\n";
  out << "genus " << d.genus() << "\n";
  const int n = d.crossing_count();
  std::vector<std::array<int, 4>> arc(n, {-1, -1, -1, -1});
  std::vector<std::pair<SlotRef, SlotRef>> arcs;
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) {
      if (arc[c][i] >= 0) continue;
      SlotRef t = d.link({c, i});
      arc[c][i] = arc[t.crossing][t.slot] = static_cast<int>(arcs.size());
      arcs.push_back({{c, i}, t});
    }
  for (int c = 0; c < n; ++c)
    out << "X(" << c << ", [" << arc[c][0] << ", " << arc[c][1] << ", " << arc[c][2] << ", " << arc[c][3]
        << "], over: " << d.crossing(c).over << ")\n";
  for (size_t a = 0; a < arcs.size(); ++a)
    out << "E(" << a << ", " << arcs[a].first.crossing << "." << arcs[a].first.slot << ", "
        << arcs[a].second.crossing << "." << arcs[a].second.slot << ")\n";
  for (int l = 0; l < d.loop_count(); ++l) out << "O(" << l << ")\n";
  for (const auto& pl : d.data().placements)
    out << "P(" << piece_name(d, d.piece_of(pl.own)) << ", " << piece_name(d, d.piece_of(pl.host)) << ", face "
        << anchor_face_name(pl.host) << ", side " << anchor_face_name(pl.own) << ")\n";
  for (size_t p = 0; p < d.data().punctures.size(); ++p) {
    const Anchor& a = d.data().punctures[p];
    out << "P(puncture " << p << ", " << piece_name(d, d.piece_of(a)) << ", face " << anchor_face_name(a) << ")\n";
  }
  return out.str();
}

}  // namespace skein
