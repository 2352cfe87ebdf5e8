#include "pmod/group_spec.hpp"

#include "pmod/errors.hpp"

namespace pmod {

namespace {

using nlohmann::json;

SemilinearMap parse_map(const json& j, std::uint32_t dim) {
  SemilinearMap map;
  map.matrix = j.at("matrix").get<Matrix>();
  map.frobenius = j.value("frobenius", 0u);
  if (j.contains("translation")) map.translation = j.at("translation").get<std::vector<FieldElem>>();
  if (map.matrix.size() != dim) throw InvalidArgument("affine generator matrix must be dim x dim");
  return map;
}

}  // namespace

GroupSpec parse_group_spec(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("group spec must be a JSON object");
  const int forms = doc.contains("named") + doc.contains("generators") + doc.contains("product") +
                    doc.contains("affine");
  if (forms != 1)
    throw InvalidArgument("group spec needs exactly one of: named, degree+generators, product, affine");
  for (const auto& [key, value] : doc.items()) {
    if (key != "named" && key != "degree" && key != "generators" && key != "product" && key != "affine")
      throw InvalidArgument("unknown group spec key: " + key);
  }
  if (doc.contains("degree") != doc.contains("generators"))
    throw InvalidArgument("degree and generators must be given together");
  try {
    if (doc.contains("named")) return GroupSpec{GroupSpec::Named{doc.at("named").get<std::string>()}};
    if (doc.contains("generators")) {
      return GroupSpec{GroupSpec::Raw{doc.at("degree").get<std::size_t>(),
                                      doc.at("generators").get<std::vector<std::string>>()}};
    }
    if (doc.contains("product")) {
      const json& parts = doc.at("product");
      if (!parts.is_array() || parts.size() != 2) throw InvalidArgument("product needs exactly two specs");
      GroupSpec::Product product;
      for (const auto& part : parts) product.factors.push_back(parse_group_spec(part));
      return GroupSpec{std::move(product)};
    }
    const json& a = doc.at("affine");
    AffineSpec spec{FiniteField(a.at("p").get<std::uint32_t>(), a.value("k", 1u)), a.value("dim", 1u), {}};
    for (const auto& g : a.value("generators", json::array())) spec.generators.push_back(parse_map(g, spec.dim));
    return GroupSpec{std::move(spec)};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed group spec: ") + e.what());
  }
}

json group_spec_to_json(const GroupSpec& spec) {
  return std::visit(
      [](const auto& form) -> json {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, GroupSpec::Named>) {
          return {{"named", form.name}};
        } else if constexpr (std::is_same_v<T, GroupSpec::Raw>) {
          return {{"degree", form.degree}, {"generators", form.generators}};
        } else if constexpr (std::is_same_v<T, GroupSpec::Product>) {
          json parts = json::array();
          for (const auto& f : form.factors) parts.push_back(group_spec_to_json(f));
          return {{"product", parts}};
        } else {
          json gens = json::array();
          for (const auto& g : form.generators)
            gens.push_back({{"matrix", g.matrix}, {"frobenius", g.frobenius}, {"translation", g.translation}});
          return {{"affine",
                   {{"p", form.field.characteristic()},
                    {"k", form.field.extension_degree()},
                    {"dim", form.dim},
                    {"generators", gens}}}};
        }
      },
      spec.form);
}

BuiltGroup build_group(const GroupSpec& spec, Limits limits) {
  return std::visit(
      [&](const auto& form) -> BuiltGroup {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, GroupSpec::Named>) {
          return build_named(form.name, limits);
        } else if constexpr (std::is_same_v<T, GroupSpec::Raw>) {
          std::vector<Permutation> gens;
          for (const auto& text : form.generators) gens.push_back(parse_cycles(text, form.degree));
          std::string label = "<";
          for (std::size_t i = 0; i < form.generators.size(); ++i)
            label += (i ? "," : "") + form.generators[i];
          label += ">";
          return BuiltGroup{label, PermGroup(form.degree, std::move(gens), limits), std::nullopt, std::nullopt};
        } else if constexpr (std::is_same_v<T, GroupSpec::Product>) {
          return build_product(build_group(form.factors.at(0), limits), build_group(form.factors.at(1), limits));
        } else {
          AffineGroup affine = AffineGroup::from_spec(form, limits);
          PermGroup group = affine.group();
          std::string label = "Affine(GF(" + std::to_string(form.field.size()) + ")^" + std::to_string(form.dim) + ")";
          return BuiltGroup{label, std::move(group), std::move(affine), std::nullopt};
        }
      },
      spec.form);
}

}  // namespace pmod
