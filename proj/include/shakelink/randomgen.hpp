#pragma once

#include <random>
#include <vector>

#include "shakelink/diagram.hpp"
#include "shakelink/groupword.hpp"
#include "shakelink/ops.hpp"

namespace shakelink {

// All suites draw from this engine so fixed seeds reproduce byte for byte.
std::mt19937_64 seeded(unsigned long long seed);

// Uniform letters until the word returns every strand home; at most
// max_letters crossings, retried a bounded number of times.
std::vector<int> random_pure_braid_word(std::mt19937_64& g, int strands, int max_letters);

StringLinkDiagram random_string_link(std::mt19937_64& g, int strands, int max_letters);

// A multidisk that respects `host`: subdisk j passes once through component
// j, optionally padded with a cancelling pair through a random component.
// At most max_passages passages per subdisk.
MultidiskSpec random_respecting_multidisk(std::mt19937_64& g, const LinkDiagram& host,
                                          int max_passages);

// Free group word over gens generators, freely reduced.
GroupWord random_group_word(std::mt19937_64& g, int gens, int letters);

// A diagram built from a random fixture through a short random chain of
// cables, bands, meridians and unions; linking oracle fodder.
LinkDiagram random_product(std::mt19937_64& g);

}  // namespace shakelink
