#include "fglab/serialization.hpp"

#include "fglab/errors.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace fglab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json &member(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json &j, const char *what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::string> as_strings(const json &j, const char *what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto &e : j) {
    if (!e.is_string())
      throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

ordered_json big_to_json(const BigInt &v) { return ordered_json(to_int64(v)); }

} // namespace

SubgroupGraph SubgroupDescription::graph() const {
  if (kernel)
    return kernel_graph(alphabet, kernel->images, kernel->d);
  return build_graph(generators, alphabet);
}

std::optional<GenIndex> SubgroupDescription::preferred_generator() const {
  if (!kernel)
    return std::nullopt;
  const auto d = kernel->d;
  auto residue = [&](std::size_t g) { return ((kernel->images[g] % d) + d) % d; };
  for (std::size_t g = 0; g < alphabet.size(); ++g)
    if (residue(g) == 1)
      return static_cast<GenIndex>(g);
  for (std::size_t g = 0; g < alphabet.size(); ++g)
    if (std::gcd(residue(g), d) == 1)
      return static_cast<GenIndex>(g);
  return std::nullopt;
}

SubgroupDescription parse_subgroup(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  SubgroupDescription desc{Alphabet(as_strings(member(j, "alphabet"), "alphabet")), {}, {}};
  const bool has_gens = j.contains("generators");
  const bool has_kernel = j.contains("kernel");
  if (has_gens == has_kernel)
    throw ParseError("subgroup needs exactly one of 'generators' or 'kernel'");

  if (has_gens) {
    for (const auto &text : as_strings(j.at("generators"), "generators"))
      desc.generators.push_back(parse_word(text, desc.alphabet));
    return desc;
  }

  const json &k = j.at("kernel");
  KernelMap map{as_int(member(k, "d"), "kernel.d"), {}};
  const json &f = member(k, "f");
  if (!f.is_object())
    throw ParseError("kernel.f must map generator names to integers");
  for (auto it = f.begin(); it != f.end(); ++it)
    if (!desc.alphabet.find(it.key()))
      throw ParseError("kernel.f names unknown generator '" + it.key() + "'");
  for (const auto &name : desc.alphabet.names())
    map.images.push_back(as_int(member(f, name.c_str()), "kernel.f value"));
  desc.kernel = std::move(map);
  return desc;
}

SubgroupDescription load_subgroup(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_subgroup(buf.str());
}

ordered_json to_json(const WitnessCertificate &cert) {
  ordered_json j;
  j["d"] = cert.d;
  j["m"] = cert.m;
  j["witness"] = to_string(cert.witness);
  j["p_vector"] = ordered_json::array();
  for (const auto &v : cert.p.entries)
    j["p_vector"].push_back(big_to_json(v));
  j["a_sum"] = big_to_json(cert.a_sum);
  ordered_json weight;
  weight["cap"] = cert.lcs_cap;
  if (cert.lcs.kind == LcsWeight::Kind::exact)
    weight["value"] = cert.lcs.value;
  else
    weight["value"] = "at_least";
  j["lcs_weight"] = weight;
  j["basis"] = ordered_json::array();
  for (const auto &w : cert.basis)
    j["basis"].push_back(to_string(w));
  j["basis_names"] = cert.basis_names;
  j["transversal"] = ordered_json::array();
  for (const auto &w : cert.transversal)
    j["transversal"].push_back(to_string(w));
  j["verdicts"] = {{"in_Fm", cert.in_Fm}, {"in_G2", cert.in_G2}};
  j["tool"] = "fglab 1.0.0";
  return j;
}

WitnessCertificate certificate_from_json(const json &j) {
  try {
    const auto &ab = xy_alphabet();
    WitnessCertificate c{0, 0, Word(ab), {}, 0, 0, {}, {}, {}, {}, false, false};
    c.d = as_int(member(j, "d"), "d");
    c.m = static_cast<unsigned>(as_int(member(j, "m"), "m"));
    c.witness = parse_word(member(j, "witness").get<std::string>(), ab);
    for (const auto &v : member(j, "p_vector"))
      c.p.entries.emplace_back(as_int(v, "p_vector entry"));
    c.a_sum = as_int(member(j, "a_sum"), "a_sum");
    const auto &weight = member(j, "lcs_weight");
    c.lcs_cap = static_cast<unsigned>(as_int(member(weight, "cap"), "lcs_weight.cap"));
    const auto &value = member(weight, "value");
    if (value.is_string() && value.get<std::string>() == "at_least")
      c.lcs = LcsWeight::at_least(c.lcs_cap + 1);
    else
      c.lcs = LcsWeight::exactly(static_cast<unsigned>(as_int(value, "lcs_weight.value")));
    for (const auto &s : as_strings(member(j, "basis"), "basis"))
      c.basis.push_back(parse_word(s, ab));
    if (j.contains("basis_names"))
      c.basis_names = as_strings(j.at("basis_names"), "basis_names");
    for (const auto &s : as_strings(member(j, "transversal"), "transversal"))
      c.transversal.push_back(parse_word(s, ab));
    const auto &verdicts = member(j, "verdicts");
    c.in_Fm = member(verdicts, "in_Fm").get<bool>();
    c.in_G2 = member(verdicts, "in_G2").get<bool>();
    return c;
  } catch (const json::exception &e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace fglab
