#include "iwartin/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "iwartin/error.hpp"

namespace iwartin {

namespace {

constexpr std::size_t kMaxDegree = 65535;

}  // namespace

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) raise(Errc::InvalidPermutation, "images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) raise(Errc::InvalidPermutation, "degree too large");
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_one_line(std::span<const i64> one_based) {
  if (one_based.size() > kMaxDegree) raise(Errc::InvalidPermutation, "degree too large");
  std::vector<std::uint16_t> img;
  img.reserve(one_based.size());
  for (i64 x : one_based) {
    if (x < 1 || static_cast<std::size_t>(x) > one_based.size()) {
      raise(Errc::InvalidPermutation, "image " + std::to_string(x) + " outside 1.." + std::to_string(one_based.size()));
    }
    img.push_back(static_cast<std::uint16_t>(x - 1));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> touched(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree || static_cast<std::size_t>(to) > degree) {
        raise(Errc::InvalidPermutation, "cycle point out of range");
      }
      if (touched[from - 1]) raise(Errc::InvalidPermutation, "cycles are not disjoint");
      touched[from - 1] = true;
      p.images_[from - 1] = static_cast<std::uint16_t>(to - 1);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) raise(Errc::InvalidPermutation, "degree mismatch in composition");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<std::uint16_t>(x);
  return out;
}

Permutation Permutation::pow(i64 exponent) const {
  const auto n = static_cast<i64>(order());
  i64 e = mod(exponent, n);
  Permutation result = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<i64> Permutation::one_line() const {
  std::vector<i64> out;
  out.reserve(images_.size());
  for (auto x : images_) out.push_back(static_cast<i64>(x) + 1);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (x != start) os << ' ';
      os << x + 1;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<std::size_t> class_of;
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<std::size_t>> members;
  std::size_t exponent = 1;
};

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (const auto& g : generators) {
    if (g.degree() != degree) raise(Errc::InvalidPermutation, "generator degree differs from group degree");
  }
  d->generators = std::move(generators);

  const Permutation id = Permutation::identity(degree);
  d->elements.push_back(id);
  d->index.emplace(id, 0);
  for (std::size_t head = 0; head < d->elements.size(); ++head) {
    for (const auto& g : d->generators) {
      Permutation next = d->elements[head] * g;
      if (d->index.contains(next)) continue;
      if (d->elements.size() >= order_cap) {
        raise(Errc::OrderCapExceeded, "group order exceeds cap " + std::to_string(order_cap));
      }
      d->index.emplace(next, d->elements.size());
      d->elements.push_back(std::move(next));
    }
  }

  // Conjugation orbits under the generators.
  const std::size_t n = d->elements.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnset);
  std::vector<std::vector<std::size_t>> raw_members;
  std::vector<Permutation> gen_inverses;
  for (const auto& g : d->generators) gen_inverses.push_back(g.inverse());
  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const std::size_t cls = raw_members.size();
    raw_members.emplace_back();
    std::deque<std::size_t> queue{start};
    raw_class[start] = cls;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      raw_members[cls].push_back(cur);
      for (std::size_t i = 0; i < d->generators.size(); ++i) {
        const Permutation conj = d->generators[i] * d->elements[cur] * gen_inverses[i];
        const std::size_t idx = d->index.at(conj);
        if (raw_class[idx] == kUnset) {
          raw_class[idx] = cls;
          queue.push_back(idx);
        }
      }
    }
  }

  struct Keyed {
    std::size_t order;
    std::size_t size;
    std::size_t min_member;
    std::size_t raw;
  };
  std::vector<Keyed> keyed;
  for (std::size_t c = 0; c < raw_members.size(); ++c) {
    const auto& mem = raw_members[c];
    const std::size_t min_member = *std::min_element(mem.begin(), mem.end(), [&](std::size_t a, std::size_t b) {
      return d->elements[a].images() < d->elements[b].images();
    });
    keyed.push_back({d->elements[mem.front()].order(), mem.size(), min_member, c});
  }
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return d->elements[a.min_member].images() < d->elements[b.min_member].images();
  });
  std::vector<std::size_t> raw_to_canonical(raw_members.size());
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    raw_to_canonical[keyed[k].raw] = k;
    d->classes.push_back({d->elements[keyed[k].min_member], keyed[k].size, keyed[k].order});
    auto mem = raw_members[keyed[k].raw];
    std::sort(mem.begin(), mem.end());
    d->members.push_back(std::move(mem));
    d->exponent = std::lcm(d->exponent, keyed[k].order);
  }
  d->class_of.resize(n);
  for (std::size_t e = 0; e < n; ++e) d->class_of[e] = raw_to_canonical[raw_class[e]];
  return PermGroup(std::move(d));
}

std::size_t PermGroup::degree() const { return d_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return d_->generators; }
std::size_t PermGroup::order() const { return d_->elements.size(); }
const std::vector<Permutation>& PermGroup::elements() const { return d_->elements; }
const std::vector<ConjugacyClass>& PermGroup::classes() const { return d_->classes; }
std::size_t PermGroup::num_classes() const { return d_->classes.size(); }
std::size_t PermGroup::exponent() const { return d_->exponent; }

std::optional<std::size_t> PermGroup::find(const Permutation& g) const {
  auto it = d_->index.find(g);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::class_of(const Permutation& g) const {
  auto idx = find(g);
  if (!idx) raise(Errc::ElementNotInGroup, g.to_cycle_string() + " is not in the group");
  return d_->class_of[*idx];
}

std::size_t PermGroup::class_of_element(std::size_t element_index) const { return d_->class_of.at(element_index); }

const std::vector<std::size_t>& PermGroup::class_members(std::size_t k) const { return d_->members.at(k); }

std::size_t PermGroup::power_class(std::size_t k, i64 e) const {
  return class_of(d_->classes.at(k).representative.pow(e));
}

std::size_t PermGroup::centralizer_order(std::size_t k) const { return order() / d_->classes.at(k).size; }

bool PermGroup::same_group(const PermGroup& other) const {
  if (d_ == other.d_) return true;
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  return std::all_of(d_->generators.begin(), d_->generators.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

PermGroup subgroup(const PermGroup& G, const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.degree() != G.degree() || !G.contains(g)) {
      raise(Errc::ElementNotInGroup, "subgroup generator " + g.to_cycle_string() + " is not in the ambient group");
    }
  }
  return PermGroup::from_generators(G.degree(), generators, G.order());
}

bool is_valid_conjugation(const PermGroup& G, const Permutation& c) {
  if (c.degree() != G.degree() || !G.contains(c)) {
    raise(Errc::ElementNotInGroup, "complex conjugation " + c.to_cycle_string() + " is not in the group");
  }
  return !c.is_identity() && (c * c).is_identity();
}

CyclicFactor CyclicFactor::for_prime(i64 p, std::optional<i64> generator) {
  if (!is_prime(p)) raise(Errc::InvalidInstance, std::to_string(p) + " is not prime");
  const i64 g = generator ? mod(*generator, p) : smallest_primitive_root(p);
  if (!is_primitive_root(g, p)) {
    raise(Errc::InvalidInstance, std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
  }
  return {p, g};
}

i64 CyclicFactor::discrete_log(i64 a) const {
  a = mod(a, modulus);
  i64 x = 1;
  for (i64 k = 0; k < modulus - 1; ++k) {
    if (x == a) return k;
    x = mulmod(x, generator, modulus);
  }
  raise(Errc::Internal, "discrete log of a non-unit");
}

Permutation DirectProduct::embed(const Permutation& base, i64 residue) const {
  const i64 p = cyclic_.modulus;
  std::vector<std::uint16_t> img(base_degree_ + static_cast<std::size_t>(p - 1));
  for (std::size_t x = 0; x < base_degree_; ++x) img[x] = base[x];
  const i64 a = mod(residue, p);
  for (i64 b = 1; b < p; ++b) {
    img[base_degree_ + static_cast<std::size_t>(b - 1)] = static_cast<std::uint16_t>(base_degree_ + static_cast<std::size_t>(mulmod(a, b, p) - 1));
  }
  return Permutation(std::move(img));
}

Permutation DirectProduct::project_base(const Permutation& x) const {
  std::vector<std::uint16_t> img(x.images().begin(), x.images().begin() + static_cast<std::ptrdiff_t>(base_degree_));
  return Permutation(std::move(img));
}

i64 DirectProduct::residue(const Permutation& x) const {
  return static_cast<i64>(x[base_degree_]) - static_cast<i64>(base_degree_) + 1;
}

DirectProduct direct_product_with_cyclic(const PermGroup& G, const CyclicFactor& C) {
  if (G.order() % static_cast<std::size_t>(C.modulus) == 0) {
    raise(Errc::POrderViolation, "p = " + std::to_string(C.modulus) + " divides |G| = " + std::to_string(G.order()));
  }
  const std::size_t new_degree = G.degree() + static_cast<std::size_t>(C.modulus - 1);
  if (new_degree > kMaxDegree) raise(Errc::InvalidPermutation, "product degree too large");
  DirectProduct shell(G, G.degree(), C);
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(shell.embed(g, 1));
  if (C.modulus > 2) gens.push_back(shell.embed(Permutation::identity(G.degree()), C.generator));
  auto product = PermGroup::from_generators(new_degree, std::move(gens));
  return DirectProduct(std::move(product), G.degree(), C);
}

}  // namespace iwartin
