#pragma once

#include <random>
#include <string>
#include <vector>

#include "mvml/kripke.hpp"

namespace mvml {

struct RandomFormulaOptions {
  std::vector<std::string> variables{"p", "q"};
  std::vector<std::string> constants;  // labels usable as canonical constants
  std::size_t maxDepth = 4;
  bool boxes = true;
  bool diamonds = false;
};

Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& opts);

// Model with the given number of worlds, R drawn from the class's values and
// the listed variables valued uniformly.
KripkeModel random_model(std::mt19937_64& rng, const AlgebraPtr& a, std::size_t worlds, FrameClass c,
                         const std::vector<std::string>& variables);

}  // namespace mvml
