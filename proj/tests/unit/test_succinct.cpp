#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "btindex/byte_io.hpp"
#include "btindex/packed_ints.hpp"
#include "btindex/permutation.hpp"
#include "btindex/rank_select_bitvector.hpp"
#include "btindex/sparse_bitvector.hpp"
#include "btindex/wavelet_tree.hpp"

using namespace btindex;

namespace {

std::vector<bool> bits_of(std::string const& s) {
  std::vector<bool> b;
  for (char c : s) b.push_back(c == '1');
  return b;
}

pos_t naive_rank(std::vector<bool> const& b, bool c, pos_t p) {
  return static_cast<pos_t>(std::count(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(p), c));
}

template <typename T>
T round_trip(T const& v) {
  byte_writer w;
  v.write(w);
  auto bytes = w.take();
  byte_reader r(bytes);
  T back = T::read(r);
  CHECK(r.at_end());
  return back;
}

}  // namespace

TEST_CASE("rank and select on 10110") {
  rank_select_bitvector bv(bits_of("10110"));
  CHECK(bv.rank(true, 4) == 3);
  CHECK(bv.rank(false, 5) == 2);
  CHECK(bv.rank(true, 0) == 0);
  CHECK(bv.rank(false, 0) == 0);
  CHECK(bv.select(true, 2) == 3);
  CHECK(bv.select(false, 1) == 2);
  CHECK_THROWS_AS(bv.select(true, 4), std::out_of_range);
  CHECK_THROWS_AS(bv.select(false, 0), std::out_of_range);
  CHECK_THROWS_AS(bv.rank(true, 6), std::out_of_range);
  CHECK(bv[1]);
  CHECK_FALSE(bv[2]);
}

TEST_CASE("empty bitvector") {
  rank_select_bitvector bv;
  CHECK(bv.size() == 0);
  CHECK(bv.rank1(0) == 0);
  CHECK_THROWS_AS(bv.select1(1), std::out_of_range);
  CHECK(round_trip(bv) == bv);
}

TEST_CASE("rank/select agree with a linear scan") {
  std::mt19937_64 rng(3);
  for (pos_t n : {1, 63, 64, 65, 511, 512, 513, 5000}) {
    for (int density : {2, 10, 50, 98}) {
      std::vector<bool> b(n);
      for (pos_t i = 0; i < n; ++i) b[i] = static_cast<int>(rng() % 100) < density;
      rank_select_bitvector bv(b);
      sparse_bitvector sp(n, [&] {
        std::vector<pos_t> ones;
        for (pos_t i = 0; i < n; ++i)
          if (b[i]) ones.push_back(i + 1);
        return ones;
      }());
      for (pos_t p = 0; p <= n; ++p) {
        REQUIRE(bv.rank1(p) == naive_rank(b, true, p));
        REQUIRE(bv.rank0(p) == naive_rank(b, false, p));
        REQUIRE(sp.rank1(p) == bv.rank1(p));
        REQUIRE(sp.rank0(p) == bv.rank0(p));
      }
      pos_t ones = 0, zeros = 0;
      for (pos_t i = 1; i <= n; ++i) {
        REQUIRE(sp[i] == bv[i]);
        if (b[i - 1]) {
          REQUIRE(bv.select1(++ones) == i);
          REQUIRE(sp.select1(ones) == i);
        } else {
          REQUIRE(bv.select0(++zeros) == i);
          REQUIRE(sp.select0(zeros) == i);
        }
      }
      CHECK(bv.count(true) == ones);
      CHECK(sp.count(false) == zeros);
      CHECK(round_trip(bv) == bv);
      CHECK(round_trip(sp) == sp);
    }
  }
}

TEST_CASE("sparse bitvector rejects unsorted positions") {
  CHECK_THROWS_AS(sparse_bitvector(5, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sparse_bitvector(5, {6}), std::invalid_argument);
  CHECK_THROWS_AS(sparse_bitvector(5, {0}), std::invalid_argument);
}

TEST_CASE("permutation [3,1,2]") {
  invertible_permutation perm({3, 1, 2});
  CHECK(perm.apply(1) == 3);
  CHECK(perm.invert(3) == 1);
  CHECK(perm.invert(1) == 2);
  CHECK_THROWS_AS(perm.apply(4), std::out_of_range);
  CHECK_THROWS_AS(invertible_permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(invertible_permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("random permutation of 1000 inverts") {
  std::vector<pos_t> f(1000);
  std::iota(f.begin(), f.end(), pos_t{1});
  std::shuffle(f.begin(), f.end(), std::mt19937_64(11));
  invertible_permutation perm(f);
  for (pos_t i = 1; i <= 1000; ++i) {
    REQUIRE(perm.invert(perm.apply(i)) == i);
    REQUIRE(perm.apply(perm.invert(i)) == i);
  }
  CHECK(round_trip(perm) == perm);
}

TEST_CASE("packed ints keep their values") {
  std::mt19937_64 rng(5);
  for (unsigned width : {1u, 3u, 17u, 63u, 64u}) {
    std::vector<std::uint64_t> v(300);
    for (auto& x : v) x = width == 64 ? rng() : rng() & ((std::uint64_t{1} << width) - 1);
    v[7] = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    packed_ints p(v);
    CHECK(p.width() == width);
    CHECK(p.to_vector() == v);
    CHECK(round_trip(p) == p);
  }
  CHECK(packed_ints(std::vector<std::uint64_t>{0, 0}).width() == 1);
}

TEST_CASE("byte reader rejects truncated input") {
  byte_writer w;
  w.put_u64(42);
  auto bytes = w.take();
  bytes.pop_back();
  byte_reader r(bytes);
  CHECK_THROWS_AS(r.get_u64(), corrupt_index_error);
}

TEST_CASE("wavelet tree access and range report") {
  std::mt19937_64 rng(9);
  for (pos_t n : {1, 2, 3, 17, 300}) {
    std::vector<pos_t> rows(n);
    std::iota(rows.begin(), rows.end(), pos_t{1});
    std::shuffle(rows.begin(), rows.end(), rng);
    wavelet_tree wt(rows, n);
    for (pos_t x = 1; x <= n; ++x) REQUIRE(wt.access(x) == rows[x - 1]);

    CHECK(wt.range_report(1, n, 1, n).size() == n);
    CHECK(wt.range_report(2, 1, 1, n).empty());
    CHECK(wt.range_report(1, n, 3, 2).empty());

    for (int trial = 0; trial < 1000; ++trial) {
      const pos_t x1 = 1 + rng() % n, x2 = 1 + rng() % n, y1 = 1 + rng() % n, y2 = 1 + rng() % n;
      std::vector<wavelet_tree::point> expect;
      for (pos_t x = x1; x <= x2; ++x)
        if (rows[x - 1] >= y1 && rows[x - 1] <= y2) expect.push_back({x, rows[x - 1]});
      std::sort(expect.begin(), expect.end(), [](auto a, auto b) { return a.y < b.y; });
      REQUIRE(wt.range_report(x1, x2, y1, y2) == expect);
    }
    CHECK(round_trip(wt) == wt);
  }
}

TEST_CASE("wavelet tree with repeated values") {
  std::vector<pos_t> v{3, 1, 3, 2, 1, 3};
  wavelet_tree wt(v, 3);
  auto pts = wt.range_report(1, 6, 3, 3);
  CHECK(pts == std::vector<wavelet_tree::point>{{1, 3}, {3, 3}, {6, 3}});
}
