#include "sgcc/edge_shift.hpp"

namespace sgcc {
namespace {
constexpr unsigned long kMaxEdges = 10'000'000;
}

EdgeList::EdgeList(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  offset_.assign(rows_ * cols_ + 1, 0);
  unsigned long total = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& n = m(i, j);
      if (sgn(n) < 0) throw DomainError("edge counts must be nonnegative");
      if (!n.fits_ulong_p() || n.get_ui() > kMaxEdges || total + n.get_ui() > kMaxEdges)
        throw DomainError("too many edges");
      total += n.get_ui();
      offset_[i * cols_ + j + 1] = total;
    }
  edges_.reserve(total);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t c = 0; c < count(i, j); ++c) edges_.push_back({i, j, c});
}

}  // namespace sgcc
