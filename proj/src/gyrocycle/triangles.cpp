#include <random>
#include <sstream>

#include "sgcc/gyrocycle.hpp"

namespace sgcc {
namespace {

template <class T, class Make>
Matrix<T> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned entry_max, Make make) {
  std::uniform_int_distribution<unsigned> entry(0, entry_max);
  Matrix<T> m(rows, cols, make(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = make(entry(rng));
  return m;
}

template <class T, class Make>
void run(TriangleSuiteResult& out, std::size_t count, std::mt19937_64& rng, std::size_t dim_max, unsigned entry_max,
         Make make) {
  std::uniform_int_distribution<std::size_t> dim(1, dim_max);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
    const auto r1 = random_matrix<T>(rng, a, b, entry_max, make);
    const auto r2 = random_matrix<T>(rng, b, c, entry_max, make);
    const auto s3 = random_matrix<T>(rng, c, a, entry_max, make);
    const Triangle<T> t = make_triangle(r1, r2, s3);
    if (check_triangle_cocycle(t)) {
      ++out.passed;
      continue;
    }
    ++out.failed;
    if (!out.first_failure) {
      std::ostringstream os;
      os << "R1=" << r1 << " R2=" << r2 << " S3=" << s3;
      out.first_failure = os.str();
    }
  }
}

}  // namespace

TriangleSuiteResult run_triangle_suite(std::size_t count, std::uint64_t seed, TriangleRing ring,
                                       std::size_t dim_max, unsigned entry_max) {
  if (dim_max == 0) throw DomainError("dim_max must be positive");
  std::mt19937_64 rng(seed);
  TriangleSuiteResult out;
  if (ring == TriangleRing::ZPlus)
    run<Integer>(out, count, rng, dim_max, entry_max, [](unsigned x) { return Integer(x); });
  else
    run<Residue>(out, count, rng, dim_max, entry_max, [](unsigned x) { return Residue(x, CocycleConfig::L); });
  return out;
}

}  // namespace sgcc
