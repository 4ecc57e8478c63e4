#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "btindex/block_tree.hpp"
#include "fixture.hpp"
#include "reference_tree.hpp"

using namespace btindex;
using namespace btindex::testing;

namespace {

rank_select_bitvector bits(std::string const& s) {
  std::vector<bool> b;
  for (char c : s) b.push_back(c == '1');
  return rank_select_bitvector(b);
}

std::vector<bytes> tree_texts() {
  std::vector<bytes> out;
  for (auto const& f : exhaustive_fixtures()) out.push_back(f.text);
  std::mt19937_64 rng(23);
  for (std::size_t n : {300, 400, 512}) {
    out.push_back(random_text(rng, n, 2));
    out.push_back(periodic_text(rng, n, 11, 3));
    out.push_back(mutated_copies(rng, n / 4, 4, 0.02));
  }
  return out;
}

// Rebuilds F_l and pi_l of a level from per-unmarked-rank source starts.
level_data with_sources(level_data lv, std::vector<pos_t> const& starts) {
  std::vector<pos_t> order(starts.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(), [&](pos_t a, pos_t b) { return starts[a] < starts[b]; });
  std::vector<pos_t> ones, forward(starts.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    ones.push_back(starts[order[t]] + t + 1);
    forward[order[t]] = t + 1;
  }
  lv.sources = sparse_bitvector(lv.explicit_length() + starts.size(), ones);
  lv.source_order = invertible_permutation(forward);
  return lv;
}

}  // namespace

TEST_CASE("shape of a length-15 text with four phrases") {
  const auto shape = compute_shape(2, 15, 4);
  CHECK(shape.b0 == 4);
  CHECK(shape.z_top == 4);
  CHECK(shape.n == 16);
  CHECK(shape.terminator() == 3);
  CHECK(shape.padding() == 4);
}

TEST_CASE("shape always leaves room for the terminator") {
  for (pos_t n = 1; n < 300; ++n)
    for (pos_t z = 1; z <= n; z += 7) {
      const auto s = compute_shape(4, n, z);
      REQUIRE(s.b0 >= 2);
      REQUIRE(std::has_single_bit(s.b0));
      REQUIRE(s.b0 * z >= n + 1);
      REQUIRE((s.b0 == 2 || (s.b0 / 2) * z < n + 1));
      REQUIRE(s.n == s.z_top * s.b0);
      REQUIRE(s.n >= n + 1);
      REQUIRE(s.n - (n + 1) < s.b0);
    }
  CHECK_THROWS_AS(compute_shape(4, 5, 6), std::invalid_argument);
  CHECK_THROWS_AS(compute_shape(4, 0, 1), std::invalid_argument);
}

TEST_CASE("levels and level-0 size") {
  indexed_text t(std::string("abaababaabaababaabaab"));
  auto const& tree = t.index.tree;
  CHECK(tree.level_count() == static_cast<std::size_t>(std::countr_zero(tree.shape().b0)) + 1);
  CHECK(tree.level(0).block_count() == tree.shape().z_top);
  CHECK(tree.level(tree.last_level()).block_length == 1);
}

TEST_CASE("marking and sources match the definition") {
  for (auto const& raw : tree_texts()) {
    indexed_text t(raw);
    auto const& tree = t.index.tree;
    const auto s = padded_text(t.text, tree.shape());
    const auto ref = reference_tree(s, tree.shape());
    REQUIRE(ref.size() == tree.level_count());
    for (std::size_t l = 0; l < ref.size(); ++l) {
      auto const& lv = tree.level(l);
      REQUIRE(lv.block_length == ref[l].block_length);
      REQUIRE(lv.block_count() == ref[l].starts.size());
      pos_t r = 0;
      for (std::size_t j = 0; j < ref[l].starts.size(); ++j) {
        REQUIRE(lv.marked[j + 1] == ref[l].marked[j]);
        if (ref[l].marked[j]) continue;
        REQUIRE(ref[l].source[j].has_value());
        REQUIRE(tree.source_position(l, ++r) == ref[l].to_level(*ref[l].source[j]));
      }
    }
    for (pos_t i = 1; i <= tree.shape().n; ++i) REQUIRE(tree.symbol_at(i) == s[i - 1]);
  }
}

TEST_CASE("extract") {
  std::mt19937_64 rng(29);
  const bytes raw = mutated_copies(rng, 200, 10, 0.03);
  indexed_text t(raw);
  auto const& tree = t.index.tree;
  const pos_t n = raw.size();
  CHECK(tree.extract(1, n) == t.text);
  CHECK(tree.extract(5, 0).empty());
  CHECK(tree.extract(n + 1, 0).empty());
  CHECK_THROWS_AS(tree.extract(0, 1), std::out_of_range);
  CHECK_THROWS_AS(tree.extract(n, 2), std::out_of_range);
  CHECK_THROWS_AS(tree.extract(n + 2, 0), std::out_of_range);
  for (int k = 0; k < 500; ++k) {
    const pos_t i = 1 + rng() % n;
    const pos_t len = rng() % (n - i + 2);
    REQUIRE(tree.extract(i, len) == std::vector<symbol_t>(t.text.begin() + (i - 1), t.text.begin() + (i - 1 + len)));
  }
}

TEST_CASE("projection arithmetic") {
  CHECK(project_down(bits("1010"), 4, 10) == 6);
  CHECK(project_up(bits("0110"), 4, 3) == 7);
  const auto ones = bits("1111");
  for (pos_t i = 1; i <= 16; ++i) CHECK(project_down(ones, 4, i) == i);
  CHECK_THROWS_AS(project_down(bits("1010"), 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(project_down(bits("1010"), 4, 17), std::out_of_range);
}

TEST_CASE("projections invert each other") {
  indexed_text t(std::string("abracadabra abracadabra cadabra"));
  auto const& tree = t.index.tree;
  for (std::size_t l = 0; l < tree.last_level(); ++l) {
    auto const& lv = tree.level(l);
    for (pos_t i = 1; i <= lv.explicit_length(); ++i) {
      if (!lv.marked[(i - 1) / lv.block_length + 1]) continue;
      REQUIRE(tree.project_up(l + 1, tree.project_down(l, i)) == i);
    }
  }
}

TEST_CASE("source position on a level without unmarked blocks") {
  indexed_text t(std::string("banana"));
  auto const& tree = t.index.tree;
  REQUIRE(tree.level(0).unmarked_count() == 0);
  CHECK_THROWS_AS(tree.source_position(0, 1), std::out_of_range);
  CHECK_THROWS_AS(tree.source_position(0, 0), std::out_of_range);
}

TEST_CASE("leaf count relations") {
  for (auto const& f : exhaustive_fixtures()) {
    indexed_text t(f.text);
    auto const& tree = t.index.tree;
    REQUIRE(tree.leaf_count() == tree.internal_count() + tree.shape().z_top);
    for (std::size_t l = 1; l < tree.level_count(); ++l)
      REQUIRE(tree.level(l).block_count() == 2 * tree.level(l - 1).marked.count(true));
  }
}

TEST_CASE("assembling a tree validates its parts") {
  std::mt19937_64 rng(31);
  indexed_text t(mutated_copies(rng, 64, 6, 0.03));
  auto const& tree = t.index.tree;
  std::vector<level_data> levels;
  for (std::size_t l = 0; l < tree.level_count(); ++l) levels.push_back(tree.level(l));
  CHECK(block_tree(tree.shape(), levels, tree.leaf_symbols()) == tree);

  auto bad_leaves = tree.leaf_symbols().to_vector();
  bad_leaves.pop_back();
  CHECK_THROWS_AS(block_tree(tree.shape(), levels, packed_ints(bad_leaves)), std::invalid_argument);

  auto it = std::find_if(levels.begin(), levels.end(), [](level_data const& lv) { return lv.unmarked_count() > 0; });
  REQUIRE(it != levels.end());
  const std::size_t l = static_cast<std::size_t>(it - levels.begin());
  std::vector<pos_t> starts;
  for (pos_t r = 1; r <= it->unmarked_count(); ++r) starts.push_back(tree.source_position(l, r));
  CHECK(block_tree(tree.shape(), [&] {
          auto copy = levels;
          copy[l] = with_sources(*it, starts);
          return copy;
        }(), tree.leaf_symbols()) == tree);
  // Point the first source at its own (unmarked) block.
  starts[0] = (it->marked.select0(1) - 1) * it->block_length + 1;
  auto broken = levels;
  broken[l] = with_sources(*it, starts);
  CHECK_THROWS_AS(block_tree(tree.shape(), broken, tree.leaf_symbols()), std::invalid_argument);
}
