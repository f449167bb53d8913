#pragma once

// Published enumeration results used by selfcheck.

#include <vector>

#include "cycov/covers.hpp"

namespace cycov {

struct PublishedCover {
    long d = 0;
    Indices indices;
    long genus = 0;
};

/// The 22 covers of thrice punctured spheres with genus 3 to 5, as
/// printed (dihedral normal form).
const std::vector<PublishedCover>& published_triples();

/// Table rows for genus 3, 4 or 5, indices sorted ascending as printed.
std::vector<PublishedCover> published_table(long genus);

/// Valid covers found by enumeration that the printed tables omit.
std::vector<PublishedCover> published_table_omissions(long genus);

}  // namespace cycov
