#pragma once

#include <string>

#include "begraph/family.hpp"
#include "begraph/generators.hpp"
#include "begraph/montecarlo.hpp"
#include "begraph/profile.hpp"
#include "begraph/standardized.hpp"

namespace begraph {

// Family document:
//   {"laws":[[{"x":v,"p":q},...],...],
//    "blocks":[[i,j,...],...],          // groups of identical copies
//    "edges":[[i,j],...],
//    "centering":{"mode":"mean"}}
// Field order irrelevant; probabilities validated on load. Vertices absent
// from every block are independent singletons.
DiscreteFamily family_from_json(const std::string& text);
std::string family_to_json(const DiscreteFamily& family);

// Moment profile document: {"N":..,"D":..,"v":..,"A":{"3":..},"M":{..},
//  "L":..,"rho":..,"centering":{..}}.
MomentProfile profile_from_json(const std::string& text);
std::string profile_to_json(const MomentProfile& profile);

// Generator spec document: {"kind":"clique_blocks","blocks":..,"size":..,
//  "law":{...}} and the analogous forms for the other kinds.
FamilySpec spec_from_json(const std::string& text);
std::string spec_to_json(const FamilySpec& spec);

// Standardized-law document {"atoms":[{"x":..,"p":..},...]}; a family
// document is also accepted (its standardized sum is taken).
StandardizedLaw standardized_law_from_json(const std::string& text);

std::string verification_report_to_json(const VerificationReport& report);

// Reads a whole file; throws ParseError when missing.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Stable CSV number formatting ("%.12g"; inf -> "inf").
std::string csv_num(double x);

}  // namespace begraph
