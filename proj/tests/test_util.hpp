#pragma once

#include <string>

#include "skein/diagram.hpp"

inline skein::PuncturedDiagram fixture(const std::string& name) {
  return skein::load_diagram(std::string(SKEIN_FIXTURES) + "/" + name + ".diag");
}

/// k nested free loops around puncture 1 at genus 1.
inline skein::PuncturedDiagram parallel_loops(int k) {
  std::string t = "skein-diagram 1\ngenus 1\n";
  for (int i = 0; i < k; ++i) t += "O(" + std::to_string(i) + ")\n";
  for (int i = 1; i < k; ++i)
    t += "P(O" + std::to_string(i) + ", O" + std::to_string(i - 1) + ", face in, side out)\n";
  if (k == 0) return skein::parse_diagram(t);
  t += "P(puncture 0, O0, face out)\nP(puncture 1, O" + std::to_string(k - 1) + ", face in)\n";
  return skein::parse_diagram(t);
}
