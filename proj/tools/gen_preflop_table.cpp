// Writes include/pokerprob/preflop_table.hpp: exact final-category counts for
// each of the 169 starting-hand classes over all C(50,5) boards.
//
//   gen_preflop_table > include/pokerprob/preflop_table.hpp

#include <cstdio>

#include "pokerprob/category_distribution.hpp"

int main() {
  using namespace pokerprob;
  std::printf("#pragma once\n\n");
  std::printf("// Generated by tools/gen_preflop_table.cpp. Do not edit.\n\n");
  std::printf("#include <array>\n#include <cstdint>\n\n");
  std::printf("namespace pokerprob {\n\n");
  std::printf("inline constexpr std::uint64_t kPreflopBoards = 2118760;\n\n");
  std::printf("// Final-category counts (HighCard..StraightFlush) per hole class; see hole_class().\n");
  std::printf(
      "inline constexpr std::array<std::array<std::uint32_t, 9>, 169> kPreflopCategoryCounts = {{\n");
  for (int cls = 0; cls < kNumHoleClasses; ++cls) {
    auto hole = hole_class_representative(cls);
    auto dist = enumerate_category_distribution(GameState(hole, {}));
    std::printf("    {{");
    for (int c = 0; c < kNumCategories; ++c) {
      std::printf("%s%llu", c ? ", " : "", static_cast<unsigned long long>(dist.counts[c]));
    }
    std::printf("}},  // %s\n", format_cards(hole).c_str());
    std::fflush(stdout);
  }
  std::printf("}};\n\n}  // namespace pokerprob\n");
  return 0;
}
