#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosetfs/representation.hpp"

namespace cosetfs {

/// Representation input format: {"degree": n, "group_generators": [cycle
/// strings], "matrices": [flat row-major "p/q" lists, one per generator]}.
/// The group is the closure of the generators; matrices are verified for
/// multiplicativity on construction.
inline RepPtr representation_from_json(const nlohmann::json& j) {
  if (!j.contains("degree") || !j.contains("group_generators") || !j.contains("matrices"))
    throw std::invalid_argument(
        "representation json: need degree, group_generators, matrices");
  const int degree = j.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& s : j.at("group_generators"))
    gens.push_back(Permutation::parse_cycles(s.get<std::string>(), degree));
  const auto& mats_json = j.at("matrices");
  if (mats_json.size() != gens.size())
    throw std::invalid_argument("representation json: one matrix per generator");
  std::vector<RatMatrix> mats;
  for (const auto& mj : mats_json) {
    const std::size_t len = mj.size();
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(len))));
    if (static_cast<std::size_t>(d) * d != len)
      throw std::invalid_argument("representation json: matrix is not square");
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const auto& cell = mj.at(i * d + k);
        m.at(i, k) = cell.is_number_integer()
                         ? Rational(static_cast<long>(cell.get<long long>()))
                         : parse_rational(cell.get<std::string>());
      }
    mats.push_back(std::move(m));
  }
  auto K = PermGroup::closure(degree, gens);
  return Representation::from_generators(std::move(K), std::move(gens), std::move(mats));
}

inline RepPtr representation_from_json_string(const std::string& text) {
  return representation_from_json(nlohmann::json::parse(text));
}

}  // namespace cosetfs
