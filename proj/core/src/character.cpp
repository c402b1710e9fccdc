#include "noether/character.hpp"

#include <map>
#include <set>
#include <string>

#include "noether/catalog.hpp"
#include "noether/error.hpp"

namespace noether {

namespace {

Claim make_claim(std::string id, std::string statement, bool ok, std::string detail = {}) {
  std::string anchor = "rho:" + id;
  return Claim{"rho:" + id, "character", std::move(statement), std::move(anchor), ok ? Status::pass : Status::fail,
               std::move(detail)};
}

std::int64_t primitive_root(std::int64_t p) {
  for (std::int64_t g = 2; g < p; ++g) {
    std::int64_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

mpq_class average(const std::vector<std::size_t>& values, std::size_t power) {
  mpz_class sum = 0;
  for (std::size_t v : values) {
    mpz_class t = 1;
    for (std::size_t k = 0; k < power; ++k) t *= static_cast<unsigned long>(v);
    sum += t;
  }
  mpq_class q(sum, static_cast<unsigned long>(values.size()));
  q.canonicalize();
  return q;
}

}  // namespace

PresentationImages PresentationImages::standard() {
  return {{Permutation::parse("(1,6)(2,3)(4,5)", 6), Permutation::parse("(1,5)(2,6)(3,4)", 6),
           Permutation::parse("(1,2)(3,6)(4,5)", 6), Permutation::parse("(1,5)(2,3)(4,6)", 6)}};
}

Report verify_presentation_hom(const PresentationImages& imgs) {
  Report r;
  r.command = "verify rho";
  const auto& s = imgs.images;
  auto name = [](std::size_t i) { return "s" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < 4; ++i) {
    bool ok = power(s[i], 2).is_identity();
    r.add(make_claim("relation:1:" + name(i), name(i) + "^2 = 1", ok, "s" + std::to_string(i + 1) + " = " + s[i].to_string()));
  }
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    Permutation p = power(s[i] * s[i + 1], 3);
    r.add(make_claim("relation:2:" + name(i) + name(i + 1), "(" + name(i) + "*" + name(i + 1) + ")^3 = 1", p.is_identity(),
                     p.is_identity() ? "" : "got " + p.to_string()));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 2; j < 4; ++j) {
      Permutation p = power(s[i] * s[j], 2);
      r.add(make_claim("relation:3:" + name(i) + name(j), "(" + name(i) + "*" + name(j) + ")^2 = 1", p.is_identity(),
                       p.is_identity() ? "" : "got " + p.to_string()));
    }
  }
  return r;
}

Report verify_rho_image(const PresentationImages& imgs) {
  Report r;
  r.command = "verify rho";
  const auto& s = imgs.images;
  PermGroup image(6, {s.begin(), s.end()});
  std::uint64_t order = image.order();
  r.add(make_claim("image:order", "|rho(S5)| = 120", order == 120, "order " + std::to_string(order)));

  PermGroup g13 = catalog_entry("G13").group();
  r.add(make_claim("image:g13", "rho(S5) = G13", same_elements(image, g13)));
  PermGroup pgl = moebius_group(5, false);
  r.add(make_claim("image:pgl2", "G13 = PGL2(F5) acting on the projective line", same_elements(g13, pgl),
                   "order " + std::to_string(pgl.order())));

  Permutation five = s[0] * s[1] * s[2] * s[3];
  Permutation want = Permutation::parse("(1,2,3,4,5)", 6);
  r.add(make_claim("image:five-cycle", "rho((1,2,3,4,5)) = rho(1,2) rho(2,3) rho(3,4) rho(4,5) = (1,2,3,4,5)", five == want,
                   "got " + five.to_string()));

  std::vector<Permutation> even;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) even.push_back(s[i] * s[j]);
  }
  PermGroup alt(6, even);
  PermGroup g14 = catalog_entry("G14").group();
  r.add(make_claim("image:a5-order", "|rho(A5)| = 60", alt.order() == 60, "order " + std::to_string(alt.order())));
  r.add(make_claim("image:g14", "rho(A5) = G14", same_elements(alt, g14)));
  PermGroup psl = moebius_group(5, true);
  r.add(make_claim("image:psl2", "G14 = PSL2(F5) acting on the projective line", same_elements(g14, psl),
                   "order " + std::to_string(psl.order())));
  return r;
}

std::vector<std::size_t> permutation_character(const PermGroup& g) {
  std::vector<std::size_t> chi;
  for (const auto& e : g.elements()) chi.push_back(e.fixed_points());
  return chi;
}

InnerProducts character_inner_products(const PermGroup& g) {
  std::vector<std::size_t> chi = permutation_character(g);
  InnerProducts ip{average(chi, 1), average(chi, 2)};
  if (ip.with_trivial.get_den() != 1 || ip.with_self.get_den() != 1) {
    throw DomainError("non-integral character inner product " + ip.with_trivial.get_str() + ", " + ip.with_self.get_str());
  }
  return ip;
}

bool is_class_function(const PermGroup& g) {
  std::map<std::vector<std::size_t>, std::size_t> value;
  for (const auto& e : g.elements()) {
    auto [it, inserted] = value.emplace(e.cycle_type(), e.fixed_points());
    if (!inserted && it->second != e.fixed_points()) return false;
  }
  return true;
}

bool is_two_transitive(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n < 2) return false;
  std::set<std::pair<Point, Point>> orbit{{1, 2}};
  std::vector<std::pair<Point, Point>> queue{{1, 2}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [a, b] = queue[head];
    for (const auto& s : g.generators()) {
      std::pair<Point, Point> next{s(a), s(b)};
      if (orbit.insert(next).second) queue.push_back(next);
    }
  }
  return orbit.size() == n * (n - 1);
}

Report character_report(const std::string& catalog_id) {
  const CatalogEntry& e = catalog_entry(catalog_id);
  PermGroup g = e.group();
  Report r;
  r.command = "character --id " + e.id;
  InnerProducts ip = character_inner_products(g);
  std::size_t orbits = g.orbits().size();
  bool two = is_two_transitive(g);
  auto claim = [&](std::string key, std::string statement, bool ok, std::string detail) {
    r.add(Claim{"character:" + e.id + ":" + key, "character", std::move(statement), "character:" + e.id, ok ? Status::pass : Status::fail,
                std::move(detail)});
  };
  claim("1-trivial", "<chi, 1> = number of orbits", ip.with_trivial == orbits,
        "<chi, 1> = " + ip.with_trivial.get_str() + ", orbits = " + std::to_string(orbits));
  claim("2-self", "<chi, chi> = 2 exactly when 2-transitive", (ip.with_self == 2) == two,
        "<chi, chi> = " + ip.with_self.get_str() + ", 2-transitive: " + (two ? "yes" : "no"));
  claim("3-class", "chi is constant on cycle types", is_class_function(g), "");
  if (ip.with_trivial == 1 && ip.with_self == 2) {
    r.add(Claim{"character:" + e.id + ":4-decomposition", "character",
                "the permutation representation is 1 + (irreducible of degree " + std::to_string(g.degree() - 1) + ")",
                "character:" + e.id, Status::pass, "ordinary character, characteristic 0"});
  }
  return r;
}

PermGroup moebius_group(std::int64_t p, bool special) {
  std::int64_t g = primitive_root(p);
  std::int64_t scale = special ? g * g % p : g;
  std::vector<Permutation> gens{projective_line_permutation(1, 1, 0, 1, p), projective_line_permutation(scale, 0, 0, 1, p),
                                projective_line_permutation(0, p - 1, 1, 0, p)};
  return PermGroup(static_cast<std::size_t>(p + 1), gens);
}

}  // namespace noether
