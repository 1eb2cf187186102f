#ifndef SYZ_REGISTRY_HPP
#define SYZ_REGISTRY_HPP

#include <string>
#include <utility>
#include <vector>

#include "syz/field.hpp"

namespace syz {

// ordered key/value result list; values are rendered decimal numbers,
// space-separated sequences, or multi-line diagrams
using ResultKV = std::vector<std::pair<std::string, std::string>>;

struct RegistryEntry {
    std::string name;
    std::string summary;
    std::string default_field; // "Q" or a prime, overridable by the caller
    long bound = 0;            // coarse-degree bound used by the recipe (0 = n/a)
    bool slow = false;         // excluded from the default verification sweep
    ResultKV expected;
    ResultKV (*compute)(const Field& f) = nullptr;
};

// pinned named examples, in deterministic order
const std::vector<RegistryEntry>& example_registry();
const RegistryEntry* find_example(const std::string& name);

struct VerifyResult {
    bool ok = false;
    ResultKV actual;
    std::string diff; // empty when ok; otherwise one block per differing key
};
VerifyResult verify_example(const RegistryEntry& e, const Field& f);

Field parse_field_spec(const std::string& spec); // "Q" | prime number

} // namespace syz

#endif
