#include "schurlab/schemes.hpp"

#include <algorithm>
#include <sstream>

namespace schurlab {

CayleyScheme::CayleyScheme(GroupPtr group, std::vector<Color> colors)
    : group_(std::move(group)), n_(group_->order()), colors_(std::move(colors))
{
  const std::size_t n = n_;
  if (colors_.size() != n * n)
    throw SchemeError("color matrix must be " + std::to_string(n) + "x" + std::to_string(n));

  Color max_color = 0;
  for (Color c : colors_)
    max_color = std::max(max_color, c);
  num_colors_ = static_cast<std::size_t>(max_color) + 1;

  std::vector<bool> used(num_colors_, false);
  for (Elem u = 0; u < n_; ++u) {
    for (Elem v = 0; v < n_; ++v) {
      Color c = color(u, v);
      used[c] = true;
      if ((c == 0) != (u == v))
        throw SchemeError("color 0 must be exactly the diagonal (pair " + std::to_string(u) +
                          "," + std::to_string(v) + ")");
    }
  }
  for (std::size_t c = 0; c < num_colors_; ++c)
    if (!used[c])
      throw SchemeError("color " + std::to_string(c) + " is not used");

  constexpr Color unset = ~Color{0};
  transpose_.assign(num_colors_, unset);
  for (Elem u = 0; u < n_; ++u) {
    for (Elem v = 0; v < n_; ++v) {
      Color c = color(u, v), t = color(v, u);
      if (transpose_[c] == unset)
        transpose_[c] = t;
      else if (transpose_[c] != t)
        throw SchemeError("reversed pairs of color " + std::to_string(c) +
                          " do not share one color");
    }
  }
}

std::vector<Elem> CayleyScheme::neighborhood(Elem v, Color i) const
{
  std::vector<Elem> out;
  for (Elem w = 0; w < n_; ++w)
    if (color(v, w) == i)
      out.push_back(w);
  return out;
}

std::string CayleyScheme::dump() const
{
  std::ostringstream out;
  for (Elem u = 0; u < n_; ++u) {
    for (Elem v = 0; v < n_; ++v) {
      if (v)
        out << ' ';
      out << color(u, v);
    }
    out << '\n';
  }
  return out.str();
}

CayleyScheme to_scheme(const SRing &s)
{
  const auto &g = *s.group();
  const auto &p = s.partition();
  const std::size_t n = g.order();
  std::vector<Color> colors(n * n);
  for (Elem u = 0; u < n; ++u) {
    const Elem u_inv = g.inv(u);
    for (Elem v = 0; v < n; ++v)
      colors[u * n + v] = static_cast<Color>(p.class_of(g.mul(v, u_inv)));
  }
  return CayleyScheme(s.group(), std::move(colors));
}

StructureTensor verify_scheme(const CayleyScheme &c)
{
  const std::uint32_t n = c.size();
  const std::size_t r = c.num_colors();
  StructureTensor q(r);
  std::vector<bool> seen(r, false);
  std::vector<std::pair<Elem, Elem>> witness(r);

  // counts[g][i * r + j] = |{h : color(f, h) = i, color(h, g) = j}| for fixed f
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(n) * r * r);
  for (Elem f = 0; f < n; ++f) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Elem h = 0; h < n; ++h) {
      const std::size_t i = c.color(f, h);
      for (Elem g = 0; g < n; ++g)
        ++counts[(static_cast<std::size_t>(g) * r + i) * r + c.color(h, g)];
    }
    for (Elem g = 0; g < n; ++g) {
      const Color k = c.color(f, g);
      const std::uint32_t *row = &counts[static_cast<std::size_t>(g) * r * r];
      if (!seen[k]) {
        seen[k] = true;
        witness[k] = {f, g};
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            q(i, j, k) = row[i * r + j];
        continue;
      }
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (q(i, j, k) != row[i * r + j]) {
            auto [f0, g0] = witness[k];
            throw NotCoherentError(
                f0, g0, f, g, static_cast<Color>(i), static_cast<Color>(j),
                "scheme is not coherent: pairs (" + std::to_string(f0) + "," +
                    std::to_string(g0) + ") and (" + std::to_string(f) + "," +
                    std::to_string(g) + ") have color " + std::to_string(k) +
                    " but different counts of paths with colors " + std::to_string(i) + "," +
                    std::to_string(j));
          }
        }
      }
    }
  }
  return q;
}

}  // namespace schurlab
