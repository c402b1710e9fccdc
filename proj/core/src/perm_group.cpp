#include "noether/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw DomainError("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw DomainError("generator " + g.to_string() + " has degree " +
                        std::to_string(g.degree()) + ", expected " + std::to_string(degree_));
    }
  }
}

PermGroup PermGroup::parse(std::string_view spec) {
  auto semi = spec.find(';');
  std::string head(spec.substr(0, semi));
  std::string tail = semi == std::string_view::npos ? std::string() : std::string(spec.substr(semi + 1));
  head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
             head.end());
  if (head.rfind("degree=", 0) != 0) throw ParseError("group spec must start with 'degree=N;'");
  std::string num = head.substr(7);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad degree in group spec '" + std::string(spec) + "'");
  }
  std::size_t degree = std::stoul(num);
  std::vector<Permutation> gens;
  std::istringstream is(tail);
  std::string tok;
  while (is >> tok) gens.push_back(Permutation::parse(tok, degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<Point>((i + 1) % degree + 1);
    gens.push_back(Permutation::from_images(cyc));
    gens.push_back(Permutation::parse("(1,2)", degree));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<Point> cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<Point>((i + 1) % degree + 1);
    gens.push_back(Permutation::from_images(cyc));
  }
  return PermGroup(degree, std::move(gens));
}

const std::vector<Permutation>& PermGroup::elements(std::size_t cap) const {
  std::call_once(cache_->once, [&] {
    std::vector<Permutation> elems;
    std::unordered_set<Permutation, PermutationHash> index;
    auto id = Permutation::identity(degree_);
    elems.push_back(id);
    index.insert(id);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : generators_) {
        Permutation next = elems[head] * g;
        if (index.insert(next).second) {
          if (elems.size() >= cap) {
            throw CapExceeded("group order exceeds enumeration cap " + std::to_string(cap));
          }
          elems.push_back(std::move(next));
        }
      }
    }
    cache_->elements = std::move(elems);
    cache_->index = std::move(index);
  });
  return cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  elements();
  return cache_->index.count(p) > 0;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<bool> seen(degree_ + 1, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Point q = g(out[head]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_ + 1, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 1; p <= degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (auto q : orb) seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == degree_; }

std::vector<Permutation> PermGroup::stabilizer(Point p) const {
  std::vector<Permutation> out;
  for (const auto& g : elements()) {
    if (g(p) == p) out.push_back(g);
  }
  return out;
}

std::map<std::vector<std::size_t>, std::size_t> PermGroup::cycle_type_histogram() const {
  std::map<std::vector<std::size_t>, std::size_t> hist;
  for (const auto& g : elements()) ++hist[g.cycle_type()];
  return hist;
}

std::string PermGroup::to_spec() const {
  std::ostringstream os;
  os << "degree=" << degree_ << ";";
  for (const auto& g : generators_) os << ' ' << g.to_string();
  return os.str();
}

bool same_elements(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  if (a.order() != b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Permutation& g) { return b.contains(g); });
}

bool is_subgroup(const PermGroup& sub, const PermGroup& super) {
  if (sub.degree() != super.degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return super.contains(g); });
}

PermGroup even_part(const PermGroup& g) {
  std::vector<Permutation> evens;
  for (const auto& e : g.elements()) {
    if (e.sign() == 1 && !e.is_identity()) evens.push_back(e);
  }
  return PermGroup(g.degree(), std::move(evens));
}

ConjugacyResult are_conjugate(std::size_t degree, const PermGroup& a, const PermGroup& b) {
  if (degree > kMaxConjugacyDegree) {
    throw DomainError("conjugacy search limited to degree <= " + std::to_string(kMaxConjugacyDegree));
  }
  if (a.degree() != degree || b.degree() != degree) throw DomainError("group degree mismatch");
  if (a.order() != b.order()) return {};
  if (a.cycle_type_histogram() != b.cycle_type_histogram()) return {};

  std::vector<Point> s(degree);
  std::iota(s.begin(), s.end(), Point{1});
  do {
    auto conj = Permutation::from_images(s);
    bool ok = std::all_of(a.generators().begin(), a.generators().end(),
                          [&](const Permutation& g) { return b.contains(conjugate(g, conj)); });
    // Equal orders plus s<a>s^-1 inside b gives equality.
    if (ok) return {true, conj};
  } while (std::next_permutation(s.begin(), s.end()));
  return {};
}

}  // namespace noether
