#include "zsdiv/classtable.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zsdiv/errors.hpp"

namespace zsdiv {

namespace {

// Class groups and chosen generator primes for the bundled fields, as listed
// in the LMFDB (labels in `source`).  HNF triples are (a, b, c) for the
// module a*Z + (b + c*w)*Z.
constexpr const char* k_embedded_json = R"json({
  "format": "zsdiv-class-table",
  "version": 1,
  "fields": [
    {
      "d": -1,
      "discriminant": -4,
      "invariant_factors": [],
      "generators": [],
      "source": "LMFDB 2.0.4.1"
    },
    {
      "d": 2,
      "discriminant": 8,
      "invariant_factors": [],
      "generators": [],
      "source": "LMFDB 2.2.8.1"
    },
    {
      "d": 10,
      "discriminant": 40,
      "invariant_factors": [2],
      "generators": [{"p": 2, "hnf": [2, 0, 1]}],
      "source": "LMFDB 2.2.40.1"
    },
    {
      "d": 195,
      "discriminant": 780,
      "invariant_factors": [2, 2],
      "generators": [{"p": 2, "hnf": [2, 1, 1]}, {"p": 3, "hnf": [3, 0, 1]}],
      "source": "LMFDB 2.2.780.1"
    },
    {
      "d": 219,
      "discriminant": 876,
      "invariant_factors": [4],
      "generators": [{"p": 5, "hnf": [5, 2, 1]}],
      "source": "LMFDB 2.2.876.1"
    },
    {
      "d": 399,
      "discriminant": 1596,
      "invariant_factors": [2, 4],
      "generators": [{"p": 2, "hnf": [2, 1, 1]}, {"p": 5, "hnf": [5, 2, 1]}],
      "source": "LMFDB 2.2.1596.1"
    }
  ]
})json";

} // namespace

ClassTable ClassTable::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("class table is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "zsdiv-class-table") {
        throw validation_error("class table: missing format marker 'zsdiv-class-table'");
    }
    ClassTable table;
    for (const auto& field : doc.at("fields")) {
        ClassTableEntry entry;
        entry.d = field.at("d").get<std::int64_t>();
        entry.discriminant = field.at("discriminant").get<std::int64_t>();
        entry.invariant_factors = field.at("invariant_factors").get<std::vector<std::int64_t>>();
        for (std::int64_t inv : entry.invariant_factors) {
            if (inv < 2) throw validation_error("class table: invariant factors must be >= 2");
        }
        for (const auto& gen : field.at("generators")) {
            const auto hnf = gen.at("hnf").get<std::vector<std::int64_t>>();
            if (hnf.size() != 3) throw validation_error("class table: HNF triple must have 3 entries");
            entry.generators.push_back({gen.at("p").get<std::int64_t>(), hnf[0], hnf[1], hnf[2]});
        }
        entry.source = field.value("source", "");
        table.entries_.push_back(std::move(entry));
    }
    return table;
}

ClassTable ClassTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open class table file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

const ClassTable& ClassTable::embedded() {
    static const ClassTable table = from_json(k_embedded_json);
    return table;
}

ClassTable ClassTable::resolve_from_env() {
    if (const char* path = std::getenv("ZSDIV_DATA")) {
        return load_file(path);
    }
    return embedded();
}

const ClassTableEntry* ClassTable::find(std::int64_t d) const {
    for (const ClassTableEntry& e : entries_) {
        if (e.d == d) return &e;
    }
    return nullptr;
}

} // namespace zsdiv
