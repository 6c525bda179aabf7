#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace pyra {

// A piece of length a placed at integer offset s covers the open interval
// ]s, s+a[ at an integer level >= 1. Two pieces overlap iff their intervals
// intersect, i.e. |s1 - s2| < a.
struct Piece {
  std::int64_t offset = 0;
  int level = 1;

  friend auto operator<=>(const Piece&, const Piece&) = default;
};

// (level, offset) ordering; heaps keep their piece list sorted this way.
inline bool piece_less(const Piece& p, const Piece& q) {
  return p.level != q.level ? p.level < q.level : p.offset < q.offset;
}

/// A heap of 1 x a pieces: no same-level overlap, every piece above level 1
/// rests on an overlapping piece one level below. Built by dropping pieces
/// from above; equality is by piece set.
class Heap {
 public:
  explicit Heap(int piece_length);

  int a() const { return a_; }
  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Level a piece dropped at `offset` would land on (1 if nothing overlaps).
  int landing_level(std::int64_t offset) const;

  /// Drop a piece at `offset`; returns the level it landed on.
  int drop(std::int64_t offset);

  /// Functional form of drop (total: any offset is allowed).
  Heap dropped(std::int64_t offset) const;

  std::int64_t min_offset() const;
  std::int64_t max_offset() const;

  /// Horizontal extent of the projection: (max offset + a) - min offset.
  std::int64_t width() const;

  bool overlaps_some(std::int64_t offset) const { return landing_level(offset) > 1; }

  /// Exactly one piece at level 1?
  bool is_pyramid() const;

  /// Full invariant check (same-level overlaps, support, duplicates).
  bool validate(std::string* why = nullptr) const;

  /// Deterministic row-per-level drawing, top level first. Each piece is
  /// rendered as [==] (width a), so adjacent pieces stay visually distinct.
  std::string render_ascii() const;

  friend bool operator==(const Heap& x, const Heap& y) {
    return x.a_ == y.a_ && x.pieces_ == y.pieces_;
  }

 private:
  int a_;
  std::vector<Piece> pieces_;                        // sorted by (level, offset)
  std::unordered_map<std::int64_t, int> col_max_;    // cell -> top level
};

enum class PyramidKind { General, Right, Left };

/// Enumeration class tag: General, right s-pyramids, or left s-pyramids.
struct PyramidClass {
  PyramidKind kind = PyramidKind::General;
  std::int64_t s = 0;

  static PyramidClass general() { return {PyramidKind::General, 0}; }
  static PyramidClass right(std::int64_t s = 0) { return {PyramidKind::Right, s}; }
  static PyramidClass left(std::int64_t s = 0) { return {PyramidKind::Left, s}; }
};

/// A heap with a unique bottom piece, normalized so the bottom covers ]0,a[.
class Pyramid {
 public:
  /// Validates the pyramid property and normalization; throws
  /// std::invalid_argument otherwise.
  explicit Pyramid(Heap heap);

  const Heap& heap() const { return heap_; }
  int a() const { return heap_.a(); }
  std::size_t size() const { return heap_.size(); }

  /// n such that the leftmost covered interval is ]-n, a-n[.
  std::int64_t left_width() const { return -heap_.min_offset(); }

  std::int64_t width() const { return heap_.width(); }

  /// No piece extends left of the bottom piece.
  bool is_right_type() const { return heap_.min_offset() == 0; }
  /// No piece extends right of the bottom piece.
  bool is_left_type() const { return heap_.max_offset() == 0; }

  /// Reflection through the bottom piece (offset -> -offset); an involution
  /// exchanging right- and left-type pyramids.
  Pyramid mirrored() const;

  friend bool operator==(const Pyramid& x, const Pyramid& y) {
    return x.heap_ == y.heap_;
  }

 private:
  Pyramid() : heap_(2) {}
  Heap heap_;
};

/// Re-drops `pieces` (any valid heap fragment, absolute coordinates) onto an
/// empty axis in level order, translating offsets by `delta`.
Heap redrop(int a, std::vector<Piece> pieces, std::int64_t delta = 0);

}  // namespace pyra
