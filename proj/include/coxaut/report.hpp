#pragma once

#include <json.hpp>

#include "coxaut/automorphisms.hpp"
#include "coxaut/cycles.hpp"
#include "coxaut/suite.hpp"

// JSON documents shared by the command-line tool and the Python module.
// nlohmann::json keeps object keys sorted and every array below is emitted in
// a deterministic order, so output is byte-stable for a given input.
namespace coxaut::report {

using nlohmann::json;

json system_json(CoxeterSystem const& sys);
json word_json(WordEngine const& engine, Word const& input);
json flexibility_json(CoxeterSystem const& sys);
json ball_json(CayleyBall const& ball);
json cycles_json(CayleyBall const& ball, int max_len);
json field_summary_json(CayleyBall const& ball, LocalPermutationField const& field);
json exotic_json(CayleyBall const& ball, FlexibilityWitness const& witness, int n);
json census_json(CayleyBall const& ball, StabilizerCensus const& census);
json suite_json(SuiteReport const& report);

}  // namespace coxaut::report
