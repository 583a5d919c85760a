#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nashd::detail {

// Contracts one axis out of a row-major tensor: out has the same layout
// with `axis` removed, out[..] = sum_k w[k] * in[.., k, ..]. `dims` is
// updated in place.
inline std::vector<double> contract_axis(std::span<const double> t,
                                         std::vector<int>& dims, int axis,
                                         std::span<const double> w) {
  const int m = dims[axis];
  std::size_t stride = 1;
  for (std::size_t j = axis + 1; j < dims.size(); ++j) {
    stride *= static_cast<std::size_t>(dims[j]);
  }
  const std::size_t out_size = t.size() / static_cast<std::size_t>(m);
  std::vector<double> out(out_size, 0.0);
  const std::size_t outer_count = out_size / stride;
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    double* o = out.data() + outer * stride;
    const double* base = t.data() + outer * stride * m;
    for (int k = 0; k < m; ++k) {
      const double wk = w[static_cast<std::size_t>(k)];
      const double* in = base + static_cast<std::size_t>(k) * stride;
      for (std::size_t inner = 0; inner < stride; ++inner) {
        o[inner] += wk * in[inner];
      }
    }
  }
  dims.erase(dims.begin() + axis);
  return out;
}

// Contracts every axis whose index is not in `keep` (ascending order),
// weighting axis j with weights[j]. The result is laid out over the kept
// axes in their original order; with an empty `keep` it is a single scalar.
inline std::vector<double> contract_except(
    std::span<const double> tensor, std::span<const int> dims,
    std::span<const int> keep,
    const std::vector<std::vector<double>>& weights) {
  std::vector<int> cur_dims(dims.begin(), dims.end());
  std::vector<int> axis_ids(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    axis_ids[i] = static_cast<int>(i);
  }
  std::vector<double> buf;
  std::span<const double> cur = tensor;
  // Walk axes from last to first so positions below the contracted axis
  // never shift.
  for (int pos = static_cast<int>(dims.size()) - 1; pos >= 0; --pos) {
    const int original = axis_ids[pos];
    bool kept = false;
    for (int k : keep) {
      if (k == original) {
        kept = true;
        break;
      }
    }
    if (kept) continue;
    buf = contract_axis(cur, cur_dims, pos,
                        weights[static_cast<std::size_t>(original)]);
    axis_ids.erase(axis_ids.begin() + pos);
    cur = buf;
  }
  if (cur.data() != buf.data()) {
    return std::vector<double>(cur.begin(), cur.end());
  }
  return buf;
}

}  // namespace nashd::detail
