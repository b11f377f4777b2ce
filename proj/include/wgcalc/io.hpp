// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "wgcalc/moments.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

// Keys keep insertion order so tables come out in partition basis order.
using Json = nlohmann::ordered_json;

/// Matrix file: {"kind": "rational"|"real"|"complex", "rows": r, "cols": c,
/// "entries": [[...], ...]}. Rational entries are "num/den" strings (plain
/// integers allowed), real entries numbers, complex entries [re, im].
MatrixSpec parse_matrix_json(const Json& doc);
MatrixSpec load_matrix_file(const std::string& path);

/// "1,2,3" -> {1,2,3}.
IndexSeq parse_index_list(std::string_view text);
/// "1,1;2,3" -> ({1,2}, {1,3}): semicolon-separated (row, column) pairs.
std::pair<IndexSeq, IndexSeq> parse_index_pairs(std::string_view text);

Json to_json(const Rational& r);
Json to_json(std::complex<double> z);
Json to_json(const ClassFunction& f);
Json to_json(const BiinvariantFunction& f);
Json to_json(const MomentFormula& f);
Json to_json(const EstimatorResult& r);

/// Flattens a document into "key,value" rows; nested keys are joined by '.'.
std::string to_csv(const Json& doc);

}  // namespace wgcalc
