#include <functional>
#include <map>

#include "svset/error.hpp"
#include "svset/scale.hpp"

namespace svset {

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(std::string_view law) const {
  for (const auto& r : laws) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

const LawResult* LawReport::first_failure() const {
  for (const auto& r : laws) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

namespace {

using Args = std::vector<Element>;

struct Law {
  std::string name;
  std::size_t arity;
  std::function<bool(const Args&)> holds;
};

// Runs every law over the chosen sample of argument tuples. A law that throws
// (an operation left the carrier) counts as failed at that tuple.
void run_laws(const std::vector<Law>& laws, const std::function<std::vector<Element>()>& carrier,
              const std::function<Element(std::mt19937_64&)>& draw, const Sampling& sampling, LawReport& report) {
  std::vector<Element> elems;
  if (sampling.mode == Sampling::Mode::Exhaustive) elems = carrier();

  for (const auto& law : laws) {
    LawResult result;
    result.law = law.name;
    auto check = [&](const Args& args) {
      ++result.checked;
      bool ok = false;
      try {
        ok = law.holds(args);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        result.passed = false;
        result.witness = args;
      }
      return ok;
    };

    if (sampling.mode == Sampling::Mode::Exhaustive) {
      const std::size_t n = elems.size();
      std::size_t total = 1;
      for (std::size_t i = 0; i < law.arity; ++i) total *= n;
      Args args(law.arity);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 0; i < law.arity; ++i) {
          args[i] = elems[rest % n];
          rest /= n;
        }
        if (!check(args)) break;
      }
    } else {
      // Each law gets its own stream so adding a law never shifts the samples of another.
      std::mt19937_64 rng(sampling.seed);
      for (std::size_t s = 0; s < sampling.samples; ++s) {
        Args args;
        for (std::size_t i = 0; i < law.arity; ++i) args.push_back(draw(rng));
        if (!check(args)) break;
      }
    }
    report.laws.push_back(std::move(result));
  }
}

}  // namespace

LawReport verify_scale_laws(const Scale& scale, const Sampling& sampling) {
  if (sampling.mode == Sampling::Mode::Exhaustive && !scale.is_finite()) {
    throw Error(ErrorCode::InfiniteCarrierExhaustive,
                "exhaustive law check needs a finite carrier; " + scale.signature() + " is infinite");
  }
  const Scale& s = scale;
  const std::vector<Law> laws = {
      {"closure", 2,
       [&](const Args& x) {
         return s.contains(s.join(x[0], x[1])) && s.contains(s.meet(x[0], x[1])) && s.contains(s.neg(x[0]));
       }},
      {"join-idempotent", 1, [&](const Args& x) { return s.join(x[0], x[0]) == x[0]; }},
      {"meet-idempotent", 1, [&](const Args& x) { return s.meet(x[0], x[0]) == x[0]; }},
      {"join-commutative", 2, [&](const Args& x) { return s.join(x[0], x[1]) == s.join(x[1], x[0]); }},
      {"meet-commutative", 2, [&](const Args& x) { return s.meet(x[0], x[1]) == s.meet(x[1], x[0]); }},
      {"join-associative", 3,
       [&](const Args& x) { return s.join(s.join(x[0], x[1]), x[2]) == s.join(x[0], s.join(x[1], x[2])); }},
      {"meet-associative", 3,
       [&](const Args& x) { return s.meet(s.meet(x[0], x[1]), x[2]) == s.meet(x[0], s.meet(x[1], x[2])); }},
      {"absorption-join", 2, [&](const Args& x) { return s.join(x[0], s.meet(x[0], x[1])) == x[0]; }},
      {"absorption-meet", 2, [&](const Args& x) { return s.meet(x[0], s.join(x[0], x[1])) == x[0]; }},
      {"bounds", 1,
       [&](const Args& x) {
         return s.leq(s.bottom(), x[0]) && s.leq(x[0], s.top()) && s.join(s.bottom(), x[0]) == x[0] &&
                s.meet(s.top(), x[0]) == x[0];
       }},
      {"neg-bounds", 1, [&](const Args&) { return s.neg(s.bottom()) == s.top() && s.neg(s.top()) == s.bottom(); }},
      {"involution", 1, [&](const Args& x) { return s.neg(s.neg(x[0])) == x[0]; }},
      {"antitone", 2,
       [&](const Args& x) {
         // (a ^ b) <= a always holds, so random sampling never lacks comparable pairs.
         const Element lower = s.meet(x[0], x[1]);
         if (!s.leq(s.neg(x[0]), s.neg(lower))) return false;
         return !s.leq(x[0], x[1]) || s.leq(s.neg(x[1]), s.neg(x[0]));
       }},
      {"de-morgan-join", 2,
       [&](const Args& x) { return s.neg(s.join(x[0], x[1])) == s.meet(s.neg(x[0]), s.neg(x[1])); }},
      {"de-morgan-meet", 2,
       [&](const Args& x) { return s.neg(s.meet(x[0], x[1])) == s.join(s.neg(x[0]), s.neg(x[1])); }},
      {"order-consistency", 2,
       [&](const Args& x) {
         const bool by_leq = s.leq(x[0], x[1]);
         return by_leq == (s.meet(x[0], x[1]) == x[0]) && by_leq == (s.join(x[0], x[1]) == x[1]);
       }},
  };

  LawReport report;
  report.subject = scale.signature();
  run_laws(
      laws, [&] { return scale.carrier(); }, [&](std::mt19937_64& rng) { return scale.sample(rng); }, sampling,
      report);
  return report;
}

Element ScaleHom::operator()(const Element& a) const {
  source.require(a);
  Element image = mapping(a);
  if (!target.contains(image)) {
    throw Error(ErrorCode::ElementNotInCarrier,
                name + " maps " + to_string(a) + " to " + to_string(image) + ", outside " + target.signature());
  }
  return image;
}

ScaleHom ScaleHom::identity(const Scale& scale) {
  return ScaleHom{scale, scale, [](const Element& a) { return a; }, "identity"};
}

ScaleHom ScaleHom::from_table(const Scale& source, const Scale& target, std::vector<std::pair<Element, Element>> table,
                              std::string name) {
  auto lookup = std::make_shared<std::map<Element, Element>>();
  for (auto& [from, to] : table) {
    source.require(from);
    target.require(to);
    lookup->insert_or_assign(from, to);
  }
  return ScaleHom{source, target,
                  [lookup](const Element& a) {
                    auto it = lookup->find(a);
                    if (it == lookup->end()) {
                      throw Error(ErrorCode::NonTotalMap, "homomorphism table has no entry for " + to_string(a));
                    }
                    return it->second;
                  },
                  std::move(name)};
}

LawReport verify_scale_hom(const ScaleHom& hom, const Sampling& sampling) {
  if (sampling.mode == Sampling::Mode::Exhaustive && !hom.source.is_finite()) {
    throw Error(ErrorCode::InfiniteCarrierExhaustive,
                "exhaustive homomorphism check needs a finite source; " + hom.source.signature() + " is infinite");
  }
  const Scale& s = hom.source;
  const Scale& t = hom.target;
  const std::vector<Law> laws = {
      {"total", 1, [&](const Args& x) { return t.contains(hom(x[0])); }},
      {"preserves-join", 2, [&](const Args& x) { return hom(s.join(x[0], x[1])) == t.join(hom(x[0]), hom(x[1])); }},
      {"preserves-meet", 2, [&](const Args& x) { return hom(s.meet(x[0], x[1])) == t.meet(hom(x[0]), hom(x[1])); }},
      {"preserves-bottom", 1, [&](const Args&) { return hom(s.bottom()) == t.bottom(); }},
      {"preserves-top", 1, [&](const Args&) { return hom(s.top()) == t.top(); }},
      {"preserves-neg", 1, [&](const Args& x) { return hom(s.neg(x[0])) == t.neg(hom(x[0])); }},
  };
  LawReport report;
  report.subject = hom.name + ": " + s.signature() + " -> " + t.signature();
  run_laws(
      laws, [&] { return s.carrier(); }, [&](std::mt19937_64& rng) { return s.sample(rng); }, sampling, report);
  return report;
}

}  // namespace svset
