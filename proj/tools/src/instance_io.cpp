#include "instance_io.hpp"

#include <fstream>

#include "hamdec/errors.hpp"
#include "hamdec/two_factor_pair.hpp"

namespace hamdec::cli {

using nlohmann::json;

namespace {

std::vector<Vertex> order_of(const HamCycle& c) {
  return {c.order().begin(), c.order().end()};
}

std::vector<Vertex> vertex_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(std::string("missing array \"") + key + "\"");
  }
  std::vector<Vertex> out;
  for (const json& v : doc[key]) {
    if (!v.is_number_integer()) {
      throw InputError(std::string("\"") + key + "\" must hold integers");
    }
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace

json instance_to_json(const HamCycle& x, const HamCycle& y) {
  return json{{"n", x.n()},
              {"directed", x.directed()},
              {"x", order_of(x)},
              {"y", order_of(y)}};
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("directed") || !doc["directed"].is_boolean()) {
    throw InputError("instance needs integer \"n\" and boolean \"directed\"");
  }
  const int n = doc["n"].get<int>();
  const bool directed = doc["directed"].get<bool>();
  HamCycle x(vertex_array(doc, "x"), directed);
  HamCycle y(vertex_array(doc, "y"), directed);
  if (x.n() != n || y.n() != n) {
    throw InputError("cycle length does not match \"n\"");
  }
  UnionMultigraph graph = build_union(x, y);
  return Instance{std::move(x), std::move(y), std::move(graph)};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
  const json doc = read_json(path);
  try {
    return instance_from_json(doc);
  } catch (const InputError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void save_instance(const std::filesystem::path& path, const HamCycle& x,
                   const HamCycle& y) {
  write_text(path, instance_to_json(x, y).dump() + "\n");
}

void save_witness(const std::filesystem::path& path, const Witness& witness) {
  const json doc{{"z", order_of(witness.z)}, {"w", order_of(witness.w)}};
  write_text(path, doc.dump() + "\n");
}

Witness load_witness(const std::filesystem::path& path,
                     const Instance& instance) {
  const json doc = read_json(path);
  const bool directed = instance.graph.directed();
  HamCycle z(vertex_array(doc, "z"), directed);
  HamCycle w(vertex_array(doc, "w"), directed);
  const auto z_edges = z.edges();
  const TwoFactorPair pair =
      TwoFactorPair::from_z_edges(instance.graph, z_edges);
  if (!is_second_decomposition(pair, instance.x, instance.y)) {
    throw InputError("witness is not a second Hamiltonian decomposition");
  }
  if (!(factor_cycle(pair, Side::W) == w)) {
    throw InputError("witness \"w\" is not the complement of \"z\"");
  }
  return Witness{std::move(z), std::move(w)};
}

}  // namespace hamdec::cli
