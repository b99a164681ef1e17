#include "support/fixtures.hpp"

#include "svset/io.hpp"

namespace svset::testing {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Rational random_unit(std::mt19937_64& rng, std::int64_t max_den) {
  const auto den = static_cast<std::int64_t>(1 + pick(rng, static_cast<std::size_t>(max_den)));
  const auto num = static_cast<std::int64_t>(pick(rng, static_cast<std::size_t>(den) + 1));
  return Rational(num, den);
}

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Universe universe_of(std::size_t n, const std::string& prefix) { return Universe(labels(prefix, n)); }

FiniteLatticeSpec boolean_square() {
  return {{"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
          {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"1", "0"}}, "0", "1"};
}

FiniteLatticeSpec square_fixing_atoms() {
  FiniteLatticeSpec s = boolean_square();
  s.neg = {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}};
  return s;
}

FiniteLatticeSpec chain4_fixing_middle() {
  return {{"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}},
          {{"0", "1"}, {"a", "a"}, {"b", "b"}, {"1", "0"}}, "0", "1"};
}

FiniteLatticeSpec pentagon() {
  return {{"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}},
          {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"c", "c"}, {"1", "0"}}, "0", "1"};
}

FiniteLatticeSpec three_atom_diamond() {
  return {{"0", "p", "q", "r", "1"},
          {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}},
          {{"0", "1"}, {"p", "q"}, {"q", "p"}, {"r", "r"}, {"1", "0"}},
          "0",
          "1"};
}

FiniteLatticeSpec chain_spec(std::size_t k) {
  FiniteLatticeSpec s;
  for (std::size_t i = 0; i <= k; ++i) s.elements.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) s.covers.emplace_back(s.elements[i], s.elements[i + 1]);
  for (std::size_t i = 0; i <= k; ++i) s.neg[s.elements[i]] = s.elements[k - i];
  s.bottom = s.elements.front();
  s.top = s.elements.back();
  return s;
}

std::vector<Scale> custom_fixtures() {
  return {build_finite_scale(boolean_square()), build_finite_scale(square_fixing_atoms()),
          build_finite_scale(pentagon()), build_finite_scale(three_atom_diamond()), build_finite_scale(chain_spec(4))};
}

SVSet random_svset(std::mt19937_64& rng, const Universe& u, const ParamSet& e, const Scale& scale) {
  return SVSet::from_function(u, e, scale, [&](std::size_t, std::size_t) { return scale.sample(rng); });
}

SVSet random_unparameterized(std::mt19937_64& rng, const Universe& u, const Scale& scale) {
  return random_svset(rng, u, ParamSet::unparameterized(), scale);
}

DecisionTable random_table(std::mt19937_64& rng, std::size_t alternatives, std::size_t criteria, std::int64_t k) {
  std::vector<EvidenceGrade> grades;
  for (std::size_t i = 0; i < alternatives * criteria; ++i) {
    grades.push_back(EvidenceGrade{Rational(static_cast<std::int64_t>(pick(rng, 21)), 20),
                                   static_cast<std::int64_t>(pick(rng, static_cast<std::size_t>(k) + 1)), k});
  }
  return DecisionTable(Universe(labels("A", alternatives)), ParamSet(labels("c", criteria)), k, grades);
}

DecisionTable laptop_table() {
  return io::decision_table_from_csv(io::read_file(SVSET_TEST_DATA "/laptops.csv"), 10);
}

DecisionTable supplier_table() {
  return io::decision_table_from_csv(io::read_file(SVSET_TEST_DATA "/suppliers.csv"), 5);
}

DecisionTable proposal_table() {
  return io::decision_table_from_csv(io::read_file(SVSET_TEST_DATA "/proposals.csv"), 5);
}

}  // namespace svset::testing
