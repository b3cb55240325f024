#include "schurlab/io.hpp"

#include <fstream>
#include <sstream>

namespace schurlab {

PartitionText parse_partition_text(const FiniteGroup &g, std::istream &in)
{
  PartitionText out;
  std::vector<std::string> labels;
  bool any_label = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::string label;
    std::string body = line;
    if (auto colon = line.find(':'); colon != std::string::npos) {
      std::istringstream lab(line.substr(0, colon));
      lab >> label;
      std::string extra;
      if (label.empty() || (lab >> extra))
        throw InputError("line " + std::to_string(line_no) + ": malformed label");
      body = line.substr(colon + 1);
      any_label = true;
    }
    auto elems = g.parse_list(body);
    if (elems.empty())
      throw InputError("line " + std::to_string(line_no) + ": basic set has no elements");
    out.classes.push_back(std::move(elems));
    labels.push_back(std::move(label));
  }
  if (any_label)
    out.labels = std::move(labels);
  return out;
}

PartitionText read_partition_file(const FiniteGroup &g, const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open partition file '" + path + "'");
  return parse_partition_text(g, in);
}

std::string format_partition(const Partition &p)
{
  const auto &g = *p.group();
  std::ostringstream out;
  out << "# " << g.spec() << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.has_labels())
      out << p.label(i) << ':';
    bool first = !p.has_labels();
    for (Elem x : p.cell(i)) {
      out << (first ? "" : " ") << g.format(x);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_constants_machine(const SRing &s)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = 0; j < s.rank(); ++j) {
      out << i << ' ' << j << " :";
      for (auto [k, c] : s.product(i, j))
        out << ' ' << k << ':' << c;
      out << '\n';
    }
  }
  return out.str();
}

std::string class_symbol(const Partition &p, std::size_t i, bool greek)
{
  if (!p.has_labels() || p.labels()[i].empty())
    return "xi_" + std::to_string(i);
  const std::string &label = p.labels()[i];
  if (label.size() > 2 && label[1] == '_' &&
      label.find_first_not_of("0123456789", 2) == std::string::npos) {
    const char *name = nullptr;
    switch (label[0]) {
    case 'Z': name = greek ? "ξ" : "xi"; break;
    case 'X': name = greek ? "θ" : "theta"; break;
    case 'Y': name = greek ? "ψ" : "psi"; break;
    case 'T': name = greek ? "φ" : "phi"; break;
    default: break;
    }
    if (name)
      return std::string(name) + label.substr(1);
  }
  return label;
}

std::string format_product(const SRing &s, std::size_t i, std::size_t j, bool greek)
{
  const auto &p = s.partition();
  std::ostringstream out;
  out << class_symbol(p, i, greek) << class_symbol(p, j, greek) << " =";
  bool first = true;
  for (auto [k, c] : s.product(i, j)) {
    out << (first ? " " : " + ");
    if (c != 1)
      out << c;
    out << class_symbol(p, k, greek);
    first = false;
  }
  return out.str();
}

}  // namespace schurlab
