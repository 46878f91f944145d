#pragma once

// Human-readable and machine-readable views of derivations and terms.
// The structured format is JSON; docs/derivation-format.md has the schema.

#include <string>
#include <string_view>

#include "skewcoh/catcalc.hpp"
#include "skewcoh/focused.hpp"
#include "skewcoh/seqcalc.hpp"

namespace skewcoh {

// Indented tree, conclusion first, one node per line.
std::string render_text(const SeqDeriv& d);
std::string render_text(const GeneralSeqDeriv& d);
std::string render_text(const FocDeriv& d);

// A bussproofs `prooftree` environment.
std::string render_latex(const SeqDeriv& d);
std::string render_latex(const GeneralSeqDeriv& d);
std::string render_latex(const FocDeriv& d);
std::string latex_formula(const Formula& f);
std::string latex_sequent(const Sequent& s);

std::string to_structured(const SeqDeriv& d);
std::string to_structured(const GeneralSeqDeriv& d);
std::string to_structured(const FocDeriv& d);
std::string to_structured(const CatTerm& t);

// Readers rebuild through the checked constructors and compare every recorded
// sequent (and phase) with the rebuilt one. Malformed JSON or missing fields
// throw SyntaxError; a node that breaks its rule throws RuleError.
SeqDeriv seq_deriv_from_structured(std::string_view json);
GeneralSeqDeriv general_deriv_from_structured(std::string_view json);
FocDeriv foc_deriv_from_structured(std::string_view json);
CatTerm cat_term_from_structured(std::string_view json);

}  // namespace skewcoh
