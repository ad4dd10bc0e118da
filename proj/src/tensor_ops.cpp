#include "yfuse/tensor_ops.hpp"

#include <string>

namespace yfuse {

long tensor_dimension(int N, int factors, long max_dim) {
  if (N < 1 || factors < 0) throw Error(ErrorKind::InvalidInput, "tensor space needs N >= 1 and factors >= 0");
  long dim = 1;
  for (int i = 0; i < factors; ++i) {
    dim *= N;
    if (dim > max_dim)
      throw Error(ErrorKind::BoundExceeded,
                  "tensor dimension " + std::to_string(N) + "^" + std::to_string(factors) + " exceeds " +
                      std::to_string(max_dim));
  }
  return dim;
}

std::vector<long> swap_action(int N, int factors, int p, int q) {
  const long dim = tensor_dimension(N, factors);
  std::vector<long> img(static_cast<std::size_t>(dim));
  for (long c = 0; c < dim; ++c) {
    auto d = tensor_digits(c, N, factors);
    std::swap(d[static_cast<std::size_t>(p)], d[static_cast<std::size_t>(q)]);
    img[static_cast<std::size_t>(c)] = tensor_index(d, N);
  }
  return img;
}

std::vector<long> block_reversal_action(int N, int factors, int first, int count) {
  const long dim = tensor_dimension(N, factors);
  std::vector<long> img(static_cast<std::size_t>(dim));
  for (long c = 0; c < dim; ++c) {
    auto d = tensor_digits(c, N, factors);
    std::reverse(d.begin() + first, d.begin() + first + count);
    img[static_cast<std::size_t>(c)] = tensor_index(d, N);
  }
  return img;
}

std::vector<std::vector<long>> contraction_classes(int N, int factors, int p, int q) {
  const long dim = tensor_dimension(N, factors);
  std::vector<std::vector<long>> out;
  for (long c = 0; c < dim; ++c) {
    auto d = tensor_digits(c, N, factors);
    if (d[static_cast<std::size_t>(p)] != 0 || d[static_cast<std::size_t>(q)] != 0) continue;
    std::vector<long> cls;
    for (int v = 0; v < N; ++v) {
      d[static_cast<std::size_t>(p)] = d[static_cast<std::size_t>(q)] = v;
      cls.push_back(tensor_index(d, N));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

SparseEntries<Rational> gl_generator(int N, const std::vector<bool>& is_vector_factor, int a, int b) {
  const int factors = static_cast<int>(is_vector_factor.size());
  SparseEntries<Rational> s;
  s.dim = tensor_dimension(N, factors);
  for (long c = 0; c < s.dim; ++c) {
    const auto d = tensor_digits(c, N, factors);
    for (int p = 0; p < factors; ++p) {
      const bool vec = is_vector_factor[static_cast<std::size_t>(p)];
      // E_ab e_b = e_a on vectors; -E_ba v*_a = -v*_b on duals.
      const int from = vec ? b : a, to = vec ? a : b;
      if (d[static_cast<std::size_t>(p)] != from) continue;
      auto e = d;
      e[static_cast<std::size_t>(p)] = to;
      s.rows.push_back(tensor_index(e, N));
      s.cols.push_back(c);
      s.values.push_back(Rational(vec ? 1 : -1));
    }
  }
  return s;
}

}  // namespace yfuse
