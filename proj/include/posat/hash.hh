/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_HASH_HH
#define POSAT_GUARD_HASH_HH 1

#include <string>

namespace posat
{
    /// SHA-256 of the bytes of `text`, as lowercase hex.
    auto content_hash(const std::string & text) -> std::string;
}

#endif
