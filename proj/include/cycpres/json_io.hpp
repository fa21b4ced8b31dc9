#pragma once

#include <string>

#include "json.hpp"

#include "cycpres/classify.hpp"
#include "cycpres/metacyclic.hpp"
#include "cycpres/verify.hpp"

namespace cycpres {

using Json = nlohmann::json;

// Large integers and rationals travel as decimal strings ("15", "1/60") so
// records survive any JSON parser; keys come out sorted, so equal records
// serialize to equal bytes.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json params_to_json(const ParamsM& p);
ParamsM params_from_json(const Json& j);

std::string rational_text(const Rat& q);

Json metacyclic_to_json(const MetacyclicParams& b);
Json decomposition_to_json(const FreeProductDecomposition& d);

// Full classification record: parameters, derived data, kind, orders, Euler
// characteristics, Tits branch, cyclic-condition data, certified flags.
Json classification_record(const ParamsM& p, const Classification& c);

// Presentations attached to a tuple: the word, the cyclic presentation, its
// shift extension, and the equivalent two-generator form.
Json construct_record(const ParamsM& p);

Json report_record(const ParamsM& p, const VerificationReport& rep);

Json family_record(const FamilyResult& fr);
Json gnkl_record(const GnklParams& q, const GnklReport& rep);

std::string csv_header();
std::string csv_row(const ParamsM& p, const Classification& c);

}  // namespace cycpres
