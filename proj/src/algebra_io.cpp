#include <filesystem>
#include <fstream>

#include "superslice/catalogue.hpp"
#include "superslice/pipeline.hpp"

namespace superslice {

namespace {

Scalar read_scalar(const Json& e) {
  auto part = [&](const char* key, long fallback) -> mpz_class {
    if (!e.contains(key)) return fallback;
    const auto& v = e.at(key);
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw Error(std::string("field ") + key + " must be an integer");
  };
  if (!e.contains("c_num")) throw Error("bracket entry without c_num");
  return make_scalar(part("c_num", 0), part("c_den", 1));
}

std::size_t read_index(const Json& e, const char* key, const std::vector<BasisElement>& basis) {
  if (!e.contains(key)) throw Error(std::string("entry without '") + key + "'");
  const auto& v = e.at(key);
  if (v.is_number_integer()) {
    auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= basis.size())
      throw Error(std::string("index ") + key + " = " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
  }
  if (v.is_string()) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].label == v.get<std::string>()) return i;
    throw Error("unknown basis label '" + v.get<std::string>() + "'");
  }
  throw Error(std::string("index ") + key + " must be an integer or a label");
}

Json scalar_fields(const Scalar& c) {
  return {{"c_num", c.get_num().get_si()}, {"c_den", c.get_den().get_si()}};
}

}  // namespace

LieSuperalgebra parse_algebra_json(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array())
    throw Error("algebra file needs a \"basis\" array");
  std::vector<BasisElement> basis;
  for (const auto& b : j.at("basis")) {
    if (!b.contains("label")) throw Error("basis entry without label");
    BasisElement e{b.at("label").get<std::string>(), Parity::Even};
    if (b.contains("parity")) {
      const auto& p = b.at("parity");
      if (p.is_number_integer()) e.parity = parity_of(p.get<int>());
      else if (p == "odd" || p == "1") e.parity = Parity::Odd;
      else if (p != "even" && p != "0") throw Error("parity must be even or odd");
    }
    basis.push_back(std::move(e));
  }
  std::vector<BracketEntry> br;
  if (j.contains("brackets"))
    for (const auto& e : j.at("brackets"))
      br.push_back({read_index(e, "i", basis), read_index(e, "j", basis), read_index(e, "k", basis), read_scalar(e)});
  std::optional<RationalMatrix> form;
  if (j.contains("form") && !j.at("form").is_null()) {
    form = RationalMatrix(basis.size(), basis.size());
    for (const auto& e : j.at("form")) (*form)(read_index(e, "i", basis), read_index(e, "j", basis)) = read_scalar(e);
  }
  std::string n = j.contains("name") ? j.at("name").get<std::string>() : name;
  return LieSuperalgebra(std::move(basis), br, form, n);
}

LieSuperalgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  return parse_algebra_json(j, std::filesystem::path(path).stem().string());
}

Json algebra_to_json(const LieSuperalgebra& g) {
  Json j;
  j["name"] = g.name();
  j["basis"] = Json::array();
  for (const auto& b : g.basis()) j["basis"].push_back({{"label", b.label}, {"parity", parity_name(b.parity)}});
  j["brackets"] = Json::array();
  for (const auto& e : g.bracket_entries()) {
    Json x = {{"i", e.i}, {"j", e.j}, {"k", e.k}};
    x.update(scalar_fields(e.c));
    j["brackets"].push_back(x);
  }
  if (g.has_form()) {
    j["form"] = Json::array();
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b)
        if (g.form()(a, b) != 0) {
          Json x = {{"i", a}, {"j", b}};
          x.update(scalar_fields(g.form()(a, b)));
          j["form"].push_back(x);
        }
  }
  return j;
}

LieSuperalgebra load_algebra(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return parse_algebra_file(source);
  return catalogue_algebra(source);
}

}  // namespace superslice
