#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qstab/errors.hpp"
#include "qstab/quiver.hpp"

namespace qstab {

// On-disk quiver description (.quiver, JSON syntax): a vertex label list,
// exactly one of an arrow list (label pairs) or an adjacency matrix, and
// optional named dimension vectors and framings.
struct QuiverDocument {
  std::vector<std::string> vertices;
  std::optional<std::vector<std::pair<std::string, std::string>>> arrows;
  std::optional<std::vector<std::vector<long long>>> adjacency;
  std::map<std::string, DimVector> vectors;
  std::map<std::string, DimVector> framings;

  std::size_t vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return i;
    throw validation_error("quiver document: unknown vertex label '" + label + "'");
  }

  void validate() const {
    if (vertices.empty()) throw validation_error("quiver document: no vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i] == vertices[j])
          throw validation_error("quiver document: duplicate vertex label '" + vertices[i] + "'");
    if (arrows.has_value() == adjacency.has_value())
      throw validation_error("quiver document: exactly one of arrows/adjacency required");
    if (arrows)
      for (const auto& [a, b] : *arrows) {
        vertex_index(a);
        vertex_index(b);
      }
    if (adjacency) {
      if (adjacency->size() != vertices.size())
        throw validation_error("quiver document: adjacency size mismatch");
      for (const auto& row : *adjacency) {
        if (row.size() != vertices.size())
          throw validation_error("quiver document: adjacency not square");
        for (long long v : row)
          if (v < 0) throw validation_error("quiver document: negative arrow count");
      }
    }
    auto check_vec = [&](const std::map<std::string, DimVector>& m, const char* kind) {
      for (const auto& [name, v] : m)
        if (v.size() != vertices.size())
          throw validation_error(std::string("quiver document: ") + kind + " '" + name +
                                 "' has wrong length");
    };
    check_vec(vectors, "vector");
    check_vec(framings, "framing");
  }

  Quiver to_quiver() const {
    validate();
    Quiver q(vertices.size(), vertices);
    if (arrows) {
      for (const auto& [a, b] : *arrows) q.add_arrows(vertex_index(a), vertex_index(b));
    } else {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
          q.add_arrows(i, j, (*adjacency)[i][j]);
    }
    return q;
  }

  static QuiverDocument from_quiver(const Quiver& q) {
    QuiverDocument doc;
    doc.vertices = q.labels();
    doc.adjacency = q.adjacency();
    return doc;
  }

  static QuiverDocument parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("quiver document: invalid syntax: ") + e.what());
    }
    QuiverDocument doc;
    try {
      if (!j.contains("vertices")) throw validation_error("quiver document: missing vertices");
      doc.vertices = j.at("vertices").get<std::vector<std::string>>();
      if (j.contains("arrows")) {
        std::vector<std::pair<std::string, std::string>> arr;
        for (const auto& pair : j.at("arrows")) {
          if (!pair.is_array() || pair.size() != 2)
            throw validation_error("quiver document: arrow entries must be [from,to]");
          arr.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
        }
        doc.arrows = std::move(arr);
      }
      if (j.contains("adjacency"))
        doc.adjacency = j.at("adjacency").get<std::vector<std::vector<long long>>>();
      if (j.contains("vectors"))
        doc.vectors = j.at("vectors").get<std::map<std::string, DimVector>>();
      if (j.contains("framings"))
        doc.framings = j.at("framings").get<std::map<std::string, DimVector>>();
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("quiver document: malformed field: ") + e.what());
    }
    doc.validate();
    return doc;
  }

  std::string dump() const {
    validate();
    nlohmann::json j;
    j["vertices"] = vertices;
    if (arrows) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [a, b] : *arrows) arr.push_back({a, b});
      j["arrows"] = arr;
    }
    if (adjacency) j["adjacency"] = *adjacency;
    if (!vectors.empty()) j["vectors"] = vectors;
    if (!framings.empty()) j["framings"] = framings;
    return j.dump(2) + "\n";
  }
};

} // namespace qstab
