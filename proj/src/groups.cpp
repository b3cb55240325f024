#include "schurlab/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace schurlab {

namespace {

// Groups up to this order keep a dense multiplication table.
constexpr std::uint32_t kTableThreshold = 729;

bool is_prime(std::uint32_t p)
{
  if (p < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u)
      result = result * base % mod;
    base = base * base % mod;
    exp >>= 1u;
  }
  return result;
}

std::uint32_t reduce(long long value, std::uint32_t mod)
{
  long long r = value % static_cast<long long>(mod);
  if (r < 0)
    r += mod;
  return static_cast<std::uint32_t>(r);
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Reads a signed integer prefix of s and advances past it.
std::optional<long long> take_int(std::string_view &s)
{
  long long value = 0;
  auto begin = s.data();
  auto end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin)
    return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - begin));
  return value;
}

// Left-normed closure of gens under right multiplication (words of length >= 1).
template <typename Mul>
std::vector<bool> word_closure(std::uint32_t order, const std::vector<Elem> &gens, Mul mul)
{
  std::vector<bool> seen(order, false);
  std::vector<Elem> queue;
  for (Elem g : gens) {
    if (!seen[g]) {
      seen[g] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem g : gens) {
      Elem y = mul(queue[head], g);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

GroupPtr FiniteGroup::metacyclic(std::uint32_t p, std::uint32_t n, std::uint32_t order_cap)
{
  if (!is_prime(p))
    throw GroupError("metacyclic: p = " + std::to_string(p) + " is not prime");
  if (n < 3)
    throw GroupError("metacyclic: n must be at least 3, got " + std::to_string(n));

  std::uint64_t order = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    order *= p;
    if (order > order_cap)
      throw GroupError("metacyclic: order " + std::to_string(p) + "^" + std::to_string(n) +
                       " exceeds the order cap " + std::to_string(order_cap));
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::metacyclic;
  g->order_ = static_cast<std::uint32_t>(order);
  g->p_ = p;
  g->n_ = n;
  g->m_ = g->order_ / p;
  g->twist_ = g->m_ / p + 1;

  // t^p = 1 mod p^{n-1}, so t^{p-1} inverts t.
  if (power_mod(g->twist_, p, g->m_) != 1)
    throw GroupError("metacyclic: twist does not have order dividing p");
  std::uint32_t s = static_cast<std::uint32_t>(power_mod(g->twist_, p - 1, g->m_));
  if (static_cast<std::uint64_t>(s) * g->twist_ % g->m_ != 1)
    throw GroupError("metacyclic: twist is not invertible");

  // b a b^-1 = a^s, hence b^j a^i = a^{i s^j} b^j and
  // (a^i1 b^j1)(a^i2 b^j2) = a^{i1 + i2 s^j1} b^{j1 + j2}.
  g->spow_.resize(p);
  g->spow_[0] = 1 % g->m_;
  for (std::uint32_t j = 1; j < p; ++j)
    g->spow_[j] = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(g->spow_[j - 1]) * s % g->m_);

  g->build_inverses();
  if (g->order_ <= kTableThreshold)
    g->materialize_table();
  g->choose_generators();

  const Elem a = g->element(1, 0);
  const Elem b = g->element(0, 1);
  if (g->pow(a, g->m_) != 0)
    throw GroupError("metacyclic: relation a^{p^{n-1}} = e fails");
  if (g->pow(b, p) != 0)
    throw GroupError("metacyclic: relation b^p = e fails");
  if (g->conj(a, b) != g->pow(a, g->twist_))
    throw GroupError("metacyclic: relation b^-1 a b = a^t fails");
  g->check_light_associativity();
  return g;
}

GroupPtr FiniteGroup::cyclic(std::uint32_t m, std::uint32_t order_cap)
{
  if (m < 1)
    throw GroupError("cyclic: order must be positive");
  if (m > order_cap)
    throw GroupError("cyclic: order " + std::to_string(m) + " exceeds the order cap " +
                     std::to_string(order_cap));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::cyclic;
  g->order_ = m;
  g->m_ = m;
  g->build_inverses();
  if (m <= kTableThreshold)
    g->materialize_table();
  g->choose_generators();
  return g;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Elem>> &table,
                                 std::vector<std::string> names, std::uint32_t order_cap)
{
  const std::size_t n = table.size();
  if (n == 0)
    throw GroupError("table: empty table");
  if (n > order_cap)
    throw GroupError("table: order " + std::to_string(n) + " exceeds the order cap " +
                     std::to_string(order_cap));
  if (!names.empty() && names.size() != n)
    throw GroupError("table: expected " + std::to_string(n) + " element names");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::table;
  g->order_ = static_cast<std::uint32_t>(n);
  g->table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw GroupError("table: row " + std::to_string(x) + " has " +
                       std::to_string(table[x].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n)
        throw GroupError("table: entry (" + std::to_string(x) + "," + std::to_string(y) +
                         ") is not a valid element index");
      g->table_[x * n + y] = table[x][y];
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (g->table_[x] != x || g->table_[x * n] != x)
      throw GroupError("table: element 0 is not a two-sided identity (row/column " +
                       std::to_string(x) + ")");
  }

  g->inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      if (g->table_[x * n + y] == 0 && g->table_[y * n + x] == 0) {
        g->inv_[x] = static_cast<Elem>(y);
        found = true;
      }
    }
    if (!found)
      throw GroupError("table: element " + std::to_string(x) + " has no two-sided inverse");
  }

  g->names_ = std::move(names);
  for (std::size_t x = 0; x < g->names_.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y)
      if (g->names_[x] == g->names_[y])
        throw GroupError("table: duplicate element name '" + g->names_[x] + "'");
  }

  g->choose_generators();
  g->check_light_associativity();
  return g;
}

Elem FiniteGroup::mul(Elem x, Elem y) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(x) * order_ + y];
  switch (kind_) {
  case GroupKind::cyclic: {
    std::uint32_t s = x + y;
    return s >= m_ ? s - m_ : s;
  }
  case GroupKind::metacyclic: {
    std::uint32_t i1 = x % m_, j1 = x / m_;
    std::uint32_t i2 = y % m_, j2 = y / m_;
    std::uint32_t i = static_cast<std::uint32_t>(
        (i1 + static_cast<std::uint64_t>(i2) * spow_[j1]) % m_);
    std::uint32_t j = (j1 + j2) % p_;
    return j * m_ + i;
  }
  case GroupKind::table:
    break;
  }
  throw GroupError("mul: table group without table");
}

Elem FiniteGroup::pow(Elem x, long long k) const
{
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem result = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(Elem x) const
{
  std::uint32_t k = 1;
  for (Elem y = x; y != 0; y = mul(y, x))
    ++k;
  return k;
}

void FiniteGroup::build_inverses()
{
  inv_.resize(order_);
  if (kind_ == GroupKind::cyclic) {
    for (Elem x = 0; x < order_; ++x)
      inv_[x] = x == 0 ? 0 : m_ - x;
    return;
  }
  // metacyclic: (a^i b^j)^-1 = b^{-j} a^{-i} = a^{-i s^{-j}} b^{-j}
  for (Elem x = 0; x < order_; ++x) {
    std::uint32_t i = x % m_, j = x / m_;
    std::uint32_t jj = (p_ - j) % p_;
    std::uint64_t ii = static_cast<std::uint64_t>((m_ - i) % m_) * spow_[jj] % m_;
    inv_[x] = jj * m_ + static_cast<std::uint32_t>(ii);
  }
}

void FiniteGroup::materialize_table()
{
  std::vector<Elem> table(static_cast<std::size_t>(order_) * order_);
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y)
      table[static_cast<std::size_t>(x) * order_ + y] = mul(x, y);
  table_ = std::move(table);
}

void FiniteGroup::choose_generators()
{
  generators_.clear();
  if (order_ == 1)
    return;
  if (kind_ == GroupKind::metacyclic) {
    generators_ = {element(1, 0), element(0, 1)};
    return;
  }
  if (kind_ == GroupKind::cyclic) {
    generators_ = {1};
    return;
  }
  auto mul_fn = [this](Elem x, Elem y) { return mul(x, y); };
  std::vector<bool> covered(order_, false);
  covered[0] = true;
  for (Elem x = 1; x < order_; ++x) {
    if (covered[x])
      continue;
    generators_.push_back(x);
    covered = word_closure(order_, generators_, mul_fn);
    covered[0] = true;
  }
}

// Light's test: the elements g with (xg)y = x(gy) for all x, y form a
// submagma, so checking a magma generating set proves associativity.
void FiniteGroup::check_light_associativity() const
{
  if (order_ == 1)
    return;
  auto mul_fn = [this](Elem x, Elem y) { return mul(x, y); };
  std::vector<Elem> gens = generators_;
  std::vector<bool> covered = word_closure(order_, gens, mul_fn);
  for (Elem x = 0; x < order_; ++x) {
    if (!covered[x]) {
      gens.push_back(x);
      covered = word_closure(order_, gens, mul_fn);
    }
  }
  for (Elem g : gens) {
    for (Elem x = 0; x < order_; ++x) {
      Elem xg = mul(x, g);
      for (Elem y = 0; y < order_; ++y) {
        if (mul(xg, y) != mul(x, mul(g, y)))
          throw GroupError("operation is not associative: (" + std::to_string(x) + "*" +
                           std::to_string(g) + ")*" + std::to_string(y) + " differs from " +
                           std::to_string(x) + "*(" + std::to_string(g) + "*" +
                           std::to_string(y) + ")");
      }
    }
  }
}

std::uint32_t FiniteGroup::prime() const
{
  if (kind_ != GroupKind::metacyclic)
    throw GroupError("prime(): not a metacyclic group");
  return p_;
}

std::uint32_t FiniteGroup::exponent() const
{
  if (kind_ != GroupKind::metacyclic)
    throw GroupError("exponent(): not a metacyclic group");
  return n_;
}

std::uint32_t FiniteGroup::a_order() const
{
  if (kind_ != GroupKind::metacyclic)
    throw GroupError("a_order(): not a metacyclic group");
  return m_;
}

Elem FiniteGroup::element(long long i, long long j) const
{
  if (kind_ != GroupKind::metacyclic)
    throw GroupError("element(i, j): not a metacyclic group");
  return reduce(j, p_) * m_ + reduce(i, m_);
}

std::pair<std::uint32_t, std::uint32_t> FiniteGroup::exponents(Elem x) const
{
  if (kind_ != GroupKind::metacyclic)
    throw GroupError("exponents(): not a metacyclic group");
  return {x % m_, x / m_};
}

std::string FiniteGroup::format(Elem x) const
{
  if (x >= order_)
    throw GroupError("format: element index " + std::to_string(x) + " out of range");
  switch (kind_) {
  case GroupKind::metacyclic: {
    auto [i, j] = exponents(x);
    if (i == 0 && j == 0)
      return "e";
    std::string out;
    if (i != 0)
      out += "a" + std::to_string(i);
    if (j != 0)
      out += "b" + std::to_string(j);
    return out;
  }
  case GroupKind::cyclic:
    return x == 0 ? "e" : "x" + std::to_string(x);
  case GroupKind::table:
    if (!names_.empty())
      return names_[x];
    return x == 0 ? "e" : "g" + std::to_string(x);
  }
  return {};
}

Elem FiniteGroup::parse(std::string_view token) const
{
  const std::string original(token);
  token = trim(token);
  if (token == "e")
    return 0;
  auto malformed = [&](const std::string &why) {
    return GroupError("cannot parse element '" + original + "' in " + name() + ": " + why);
  };
  if (token.empty())
    throw malformed("empty token");

  switch (kind_) {
  case GroupKind::metacyclic: {
    long long i = 0, j = 0;
    bool any = false;
    if (!token.empty() && token.front() == 'a') {
      token.remove_prefix(1);
      auto v = take_int(token);
      if (!v)
        throw malformed("expected an exponent after 'a'");
      i = *v;
      any = true;
    }
    if (!token.empty() && token.front() == 'b') {
      token.remove_prefix(1);
      auto v = take_int(token);
      if (!v)
        throw malformed("expected an exponent after 'b'");
      j = *v;
      any = true;
    }
    if (!any || !token.empty())
      throw malformed("expected e, a<int>, b<int> or a<int>b<int>");
    return element(i, j);
  }
  case GroupKind::cyclic: {
    if (token.front() != 'x')
      throw malformed("cyclic group elements are written x<int>");
    token.remove_prefix(1);
    auto v = take_int(token);
    if (!v || !token.empty())
      throw malformed("expected x<int>");
    return reduce(*v, m_);
  }
  case GroupKind::table: {
    for (std::size_t x = 0; x < names_.size(); ++x)
      if (names_[x] == token)
        return static_cast<Elem>(x);
    if (token.front() == 'g') {
      token.remove_prefix(1);
      auto v = take_int(token);
      if (v && token.empty() && *v >= 0 && *v < static_cast<long long>(order_))
        return static_cast<Elem>(*v);
    }
    throw malformed("unknown element name");
  }
  }
  throw malformed("unknown group kind");
}

std::vector<Elem> FiniteGroup::parse_list(std::string_view tokens) const
{
  std::vector<Elem> out;
  std::string text(tokens);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::string tok;
  while (in >> tok)
    out.push_back(parse(tok));
  return out;
}

std::string FiniteGroup::spec() const
{
  switch (kind_) {
  case GroupKind::metacyclic:
    return "metacyclic:p=" + std::to_string(p_) + ",n=" + std::to_string(n_);
  case GroupKind::cyclic:
    return "cyclic:m=" + std::to_string(m_);
  case GroupKind::table:
    return "table:order=" + std::to_string(order_);
  }
  return {};
}

std::string FiniteGroup::name() const
{
  switch (kind_) {
  case GroupKind::metacyclic:
    return "M_" + std::to_string(order_);
  case GroupKind::cyclic:
    return "C_" + std::to_string(m_);
  case GroupKind::table:
    return "T_" + std::to_string(order_);
  }
  return {};
}

std::vector<std::vector<Elem>> read_table_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw GroupError("cannot open table file '" + path + "'");
  std::vector<std::vector<Elem>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#')
      continue;
    std::vector<Elem> row;
    std::istringstream fields{std::string(view)};
    std::string field;
    while (fields >> field) {
      std::string_view f = field;
      auto v = take_int(f);
      if (!v || !f.empty() || *v < 0)
        throw GroupError("table file '" + path + "': bad entry '" + field + "'");
      row.push_back(static_cast<Elem>(*v));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupPtr parse_group_spec(std::string_view spec, std::uint32_t order_cap)
{
  const std::string original(spec);
  spec = trim(spec);
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw GroupError("bad group specifier '" + original + "'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  if (kind == "table")
    return FiniteGroup::from_table(read_table_file(std::string(rest)), {}, order_cap);

  // key=value pairs separated by commas
  std::vector<std::pair<std::string, long long>> params;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw GroupError("bad group specifier '" + original + "': expected key=value");
    std::string_view value = item.substr(eq + 1);
    auto v = take_int(value);
    if (!v || !value.empty() || *v < 0)
      throw GroupError("bad group specifier '" + original + "': bad integer");
    params.emplace_back(std::string(trim(item.substr(0, eq))), *v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  auto get = [&](const std::string &key) {
    for (auto &[k, v] : params)
      if (k == key)
        return v;
    throw GroupError("bad group specifier '" + original + "': missing " + key);
  };
  auto checked = [&](long long v) {
    if (v > 1'000'000'000LL)
      throw GroupError("bad group specifier '" + original + "': value too large");
    return static_cast<std::uint32_t>(v);
  };

  if (kind == "metacyclic")
    return FiniteGroup::metacyclic(checked(get("p")), checked(get("n")), order_cap);
  if (kind == "cyclic")
    return FiniteGroup::cyclic(checked(get("m")), order_cap);
  throw GroupError("unknown group kind '" + std::string(kind) + "'");
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), false);
  for (Elem x : members_) {
    if (x >= parent_->order())
      throw GroupError("subgroup: element index out of range");
    mask_[x] = true;
  }
  if (members_.empty() || members_.front() != 0)
    throw GroupError("subgroup: identity missing");
  for (Elem x : members_) {
    if (!mask_[parent_->inv(x)])
      throw GroupError("subgroup: not closed under inverses");
    for (Elem y : members_)
      if (!mask_[parent_->mul(x, y)])
        throw GroupError("subgroup: not closed under multiplication");
  }
}

bool Subgroup::contains(Elem x) const
{
  return x < mask_.size() && mask_[x];
}

bool Subgroup::is_subset_of(const Subgroup &other) const
{
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem x) { return other.contains(x); });
}

Subgroup subgroup_generated(const GroupPtr &g, const std::vector<Elem> &gens)
{
  for (Elem x : gens)
    if (x >= g->order())
      throw GroupError("subgroup_generated: element index out of range");
  std::vector<bool> seen(g->order(), false);
  std::vector<Elem> members{0};
  seen[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Elem s : gens) {
      Elem y = g->mul(members[head], s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const GroupPtr &g)
{
  std::vector<Elem> all(g->order());
  for (Elem x = 0; x < g->order(); ++x)
    all[x] = x;
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr &g)
{
  return Subgroup(g, {0});
}

namespace {

std::vector<std::vector<Elem>> cosets(const GroupPtr &g, const Subgroup &h, bool left)
{
  std::vector<bool> done(g->order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g->order(); ++x) {
    if (done[x])
      continue;
    std::vector<Elem> coset;
    coset.reserve(h.size());
    for (Elem y : h.members()) {
      Elem xy = left ? g->mul(x, y) : g->mul(y, x);
      done[xy] = true;
      coset.push_back(xy);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Elem>> left_cosets(const GroupPtr &g, const Subgroup &h)
{
  return cosets(g, h, true);
}

std::vector<std::vector<Elem>> right_cosets(const GroupPtr &g, const Subgroup &h)
{
  return cosets(g, h, false);
}

bool is_normal(const GroupPtr &g, const Subgroup &h)
{
  for (Elem s : g->generators())
    for (Elem x : h.members())
      if (!h.contains(g->conj(x, s)))
        return false;
  return true;
}

bool is_normal_in(const Subgroup &upper, const Subgroup &lower)
{
  if (!lower.is_subset_of(upper))
    return false;
  const auto &g = upper.parent();
  for (Elem u : upper.members())
    for (Elem x : lower.members())
      if (!lower.contains(g->conj(x, u)))
        return false;
  return true;
}

QuotientMap::QuotientMap(GroupPtr source, Subgroup upper, Subgroup lower)
    : source_(std::move(source)), upper_(std::move(upper)), lower_(std::move(lower))
{
  if (!lower_.is_subset_of(upper_))
    throw GroupError("quotient: L is not contained in U");
  if (!is_normal_in(upper_, lower_))
    throw GroupError("quotient: L is not normal in U");

  projection_.assign(source_->order(), -1);
  for (Elem u : upper_.members()) {
    if (projection_[u] >= 0)
      continue;
    const auto coset = static_cast<std::int64_t>(reps_.size());
    reps_.push_back(u);
    for (Elem x : lower_.members())
      projection_[source_->mul(u, x)] = coset;
  }

  const std::size_t k = reps_.size();
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      table[x][y] = static_cast<Elem>(projection_[source_->mul(reps_[x], reps_[y])]);
  std::vector<std::string> names;
  names.reserve(k);
  for (Elem r : reps_)
    names.push_back("[" + source_->format(r) + "]");
  target_ = FiniteGroup::from_table(table, std::move(names), source_->order());
}

Elem QuotientMap::project(Elem x) const
{
  if (x >= projection_.size() || projection_[x] < 0)
    throw GroupError("quotient: element " + std::to_string(x) + " is outside U");
  return static_cast<Elem>(projection_[x]);
}

QuotientMap quotient(const GroupPtr &g, const Subgroup &upper, const Subgroup &lower)
{
  return QuotientMap(g, upper, lower);
}

}  // namespace schurlab
