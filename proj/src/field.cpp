#include "syz/field.hpp"

#include <cstdlib>
#include <cstring>

namespace syz {

Field default_field() {
    const char* env = std::getenv("SYZFORGE_FIELD");
    if (env && *env) {
        if (std::strcmp(env, "Q") == 0 || std::strcmp(env, "q") == 0)
            return Field::rationals();
        long p = std::strtol(env, nullptr, 10);
        if (p >= 3) return Field::prime((std::uint32_t)p);
    }
    return Field::prime(32003);
}

} // namespace syz
