#include "pyra/heap.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pyra {

Heap::Heap(int piece_length) : a_(piece_length) {
  if (piece_length < 2) throw std::invalid_argument("piece length must be >= 2");
}

int Heap::landing_level(std::int64_t offset) const {
  int top = 0;
  for (std::int64_t c = offset; c < offset + a_; ++c) {
    auto it = col_max_.find(c);
    if (it != col_max_.end() && it->second > top) top = it->second;
  }
  return top + 1;
}

int Heap::drop(std::int64_t offset) {
  const int level = landing_level(offset);
  Piece p{offset, level};
  pieces_.insert(std::upper_bound(pieces_.begin(), pieces_.end(), p, piece_less), p);
  for (std::int64_t c = offset; c < offset + a_; ++c) col_max_[c] = level;
  return level;
}

Heap Heap::dropped(std::int64_t offset) const {
  Heap h = *this;
  h.drop(offset);
  return h;
}

std::int64_t Heap::min_offset() const {
  if (pieces_.empty()) throw std::logic_error("min_offset of empty heap");
  std::int64_t m = pieces_[0].offset;
  for (const Piece& p : pieces_) m = std::min(m, p.offset);
  return m;
}

std::int64_t Heap::max_offset() const {
  if (pieces_.empty()) throw std::logic_error("max_offset of empty heap");
  std::int64_t m = pieces_[0].offset;
  for (const Piece& p : pieces_) m = std::max(m, p.offset);
  return m;
}

std::int64_t Heap::width() const { return max_offset() + a_ - min_offset(); }

bool Heap::is_pyramid() const {
  int bottoms = 0;
  for (const Piece& p : pieces_)
    if (p.level == 1) ++bottoms;
  return bottoms == 1;
}

bool Heap::validate(std::string* why) const {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      const Piece &p = pieces_[i], &q = pieces_[j];
      if (p.offset == q.offset && p.level == q.level) return fail("duplicate piece");
      if (p.level == q.level && std::llabs(p.offset - q.offset) < a_)
        return fail("same-level overlap");
    }
  }
  for (const Piece& p : pieces_) {
    if (p.level < 1) return fail("level below 1");
    if (p.level == 1) continue;
    bool supported = false;
    for (const Piece& q : pieces_) {
      if (q.level == p.level - 1 && std::llabs(p.offset - q.offset) < a_) {
        supported = true;
        break;
      }
    }
    if (!supported) return fail("unsupported piece");
  }
  return true;
}

std::string Heap::render_ascii() const {
  if (pieces_.empty()) return "";
  const std::int64_t lo = min_offset();
  const std::int64_t cols = width();
  int top = 0;
  for (const Piece& p : pieces_) top = std::max(top, p.level);
  std::string out;
  for (int level = top; level >= 1; --level) {
    std::string row(static_cast<std::size_t>(cols), ' ');
    for (const Piece& p : pieces_) {
      if (p.level != level) continue;
      const std::size_t c = static_cast<std::size_t>(p.offset - lo);
      row[c] = '[';
      row[c + static_cast<std::size_t>(a_) - 1] = ']';
      for (int k = 1; k < a_ - 1; ++k) row[c + static_cast<std::size_t>(k)] = '=';
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

Pyramid::Pyramid(Heap heap) : heap_(std::move(heap)) {
  std::string why;
  if (!heap_.validate(&why)) throw std::invalid_argument("invalid heap: " + why);
  if (heap_.empty()) throw std::invalid_argument("empty heap is not a pyramid");
  if (!heap_.is_pyramid()) throw std::invalid_argument("heap has more than one bottom piece");
  for (const Piece& p : heap_.pieces())
    if (p.level == 1 && p.offset != 0)
      throw std::invalid_argument("pyramid not normalized (bottom piece must cover ]0,a[)");
}

Pyramid Pyramid::mirrored() const {
  std::vector<Piece> ps = heap_.pieces();
  for (Piece& p : ps) p.offset = -p.offset;
  return Pyramid(redrop(a(), std::move(ps)));
}

Heap redrop(int a, std::vector<Piece> pieces, std::int64_t delta) {
  std::sort(pieces.begin(), pieces.end(), piece_less);
  Heap h(a);
  for (const Piece& p : pieces) h.drop(p.offset + delta);
  return h;
}

}  // namespace pyra
