#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pmod/zoo.hpp"

namespace pmod {

/// Declarative group description, read from a JSON document holding exactly
/// one of the keys below:
///
///   {"named": "AGammaL(1,8)"}
///   {"degree": 4, "generators": ["(0 1 2 3)", "(0 1)"]}
///   {"product": [<spec>, <spec>]}
///   {"affine": {"p": 2, "k": 3, "dim": 1,
///               "generators": [{"matrix": [[2]], "frobenius": 0, "translation": [0]}]}}
///
/// Matrix and translation entries are field element indices (see FiniteField).
struct GroupSpec {
  struct Named {
    std::string name;
  };
  struct Raw {
    std::size_t degree = 0;
    std::vector<std::string> generators;
  };
  struct Product {
    std::vector<GroupSpec> factors;
  };

  std::variant<Named, Raw, Product, AffineSpec> form;
};

/// Throws InvalidArgument on a malformed document.
GroupSpec parse_group_spec(const nlohmann::json& doc);
nlohmann::json group_spec_to_json(const GroupSpec& spec);

BuiltGroup build_group(const GroupSpec& spec, Limits limits = {});

}  // namespace pmod
