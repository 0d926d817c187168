#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zsdiv {

struct ClassTableGenerator {
    std::int64_t p; // rational prime below the generator ideal
    std::int64_t a, b, c; // HNF triple, bit-exact
};

struct ClassTableEntry {
    std::int64_t d;
    std::int64_t discriminant;
    std::vector<std::int64_t> invariant_factors; // empty for the trivial group
    std::vector<ClassTableGenerator> generators;
    std::string source;
};

/**
 * Reference class-group data for the bundled fields.  The embedded copy can
 * be overridden by pointing the ZSDIV_DATA environment variable at a file in
 * the same JSON format.
 */
class ClassTable {
public:
    static const ClassTable& embedded();
    static ClassTable from_json(const std::string& text);
    static ClassTable load_file(const std::string& path);
    // Embedded table unless ZSDIV_DATA is set.
    static ClassTable resolve_from_env();

    const ClassTableEntry* find(std::int64_t d) const;
    const std::vector<ClassTableEntry>& entries() const { return entries_; }

private:
    std::vector<ClassTableEntry> entries_;
};

} // namespace zsdiv
