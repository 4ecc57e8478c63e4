#pragma once

#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/rank_select_bitvector.hpp"
#include "btindex/types.hpp"

namespace btindex {

/*
    Levelwise (pointerless) balanced wavelet tree over a sequence of values
    in [1..max_value]. Level d holds bit d (MSB first) of every element, with
    the elements of each node stored contiguously and nodes ordered by value
    prefix. Used as a grid with one point (x, values[x]) per column.
*/
class wavelet_tree {
 public:
  struct point {
    pos_t x;
    pos_t y;
    friend bool operator==(point const&, point const&) = default;
    friend auto operator<=>(point const&, point const&) = default;
  };

  wavelet_tree() = default;
  wavelet_tree(std::vector<pos_t> const& values, pos_t max_value);

  pos_t size() const { return size_; }
  pos_t max_value() const { return max_value_; }
  unsigned depth() const { return depth_; }

  /// Value at column x (1-based).
  pos_t access(pos_t x) const;

  /// All points with x in [x1, x2] and y in [y1, y2]; empty when either
  /// interval is empty. Ordered by y, then x.
  std::vector<point> range_report(pos_t x1, pos_t x2, pos_t y1, pos_t y2) const;

  void write(byte_writer& out) const;
  static wavelet_tree read(byte_reader& in);

  friend bool operator==(wavelet_tree const&, wavelet_tree const&) = default;

 private:
  struct frame {
    pos_t start;
    bool bit;
  };

  void report(unsigned d, pos_t s, pos_t e, pos_t a, pos_t b, pos_t vlo, pos_t ylo, pos_t yhi,
              std::vector<frame>& path, std::vector<point>& out) const;
  pos_t climb(pos_t rel, std::vector<frame> const& path) const;

  pos_t size_ = 0;
  pos_t max_value_ = 0;
  unsigned depth_ = 0;
  std::vector<rank_select_bitvector> levels_;
};

}  // namespace btindex
