#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "boolrep/bool_matrix.hpp"
#include "boolrep/hereditary.hpp"

namespace boolrep {

// Subsets of E = {1..n} given as digit strings such as "125".
std::vector<Mask> subsets_from_strings(const GroundSet& ground, const std::vector<std::string>& sets);
std::vector<Mask> subsets_of_size_at_most(std::size_t n, std::size_t k);

HereditaryCollection uniform(std::size_t a, std::size_t b);
std::vector<Mask> fano_lines();
HereditaryCollection fano();
HereditaryCollection example_bigex();
BoolMatrix example_libourne_matrix();
HereditaryCollection example_unio_first();
HereditaryCollection example_unio_second();
HereditaryCollection example_truno();
// Simple collection on 4 points; bit t of `triples` keeps the t-th triple
// in the order 123, 124, 134, 234.
HereditaryCollection example_fourpoints(unsigned triples);
HereditaryCollection example_equal_bases_nonmatroid();
BoolMatrix section3_matrix();
BoolMatrix section3_nu_matrix();

// Minimum-degree witnesses and stacking data from the worked examples.
BoolMatrix bigex_mindeg_witness();
BoolMatrix bigex_full_matrix();
BoolMatrix bigex_stack_first();
BoolMatrix bigex_stack_second();
BoolMatrix fano_mindeg_witness();
BoolMatrix fano_stack_first();
BoolMatrix fano_stack_second();
BoolMatrix fano_stack_result();

// Random downward closed family generated by `facet_count` random subsets.
HereditaryCollection random_hereditary(std::size_t n, std::size_t facet_count, std::mt19937_64& rng);
// Column matroid of n distinct nonzero random vectors over GF(p)^dim.
HereditaryCollection random_linear_matroid(std::size_t n, std::size_t dim, unsigned p, std::mt19937_64& rng);

}  // namespace boolrep
