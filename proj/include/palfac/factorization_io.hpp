#pragma once
/**
 * @file factorization_io.hpp
 * @brief Renderings of a Factorization: plain text, JSON, CSV.
 *
 * The JSON layout is the stable machine contract:
 *   {"mode":"pc","source_length":N,
 *    "factors":[{"start":0,"len":1,"text":"0","certified":true},...],
 *    "residue":"","stalled_at":null}
 * Plain mode joins factor texts with " | " for eyeballing; CSV emits one
 * factor per row as (index,start,len,text,certified) with a 1-based index.
 */

#include <string>

#include "json.hpp"
#include "palfac/factorizer.hpp"
#include "palfac/word.hpp"

namespace palfac {

inline std::string factor_text(const Factorization& f, std::size_t i, const Word& w) {
  const Factor& x = f.factors[i];
  return render(w.subword(x.start, x.len));
}

inline std::string residue_text(const Factorization& f, const Word& w) {
  if (!f.residue_start) return "";
  return render(w.suffix_from(*f.residue_start));
}

inline nlohmann::ordered_json factorization_to_json(const Factorization& f, const Word& w) {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(f.mode);
  j["source_length"] = f.source_length;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    nlohmann::ordered_json e;
    e["start"] = f.factors[i].start;
    e["len"] = f.factors[i].len;
    e["text"] = factor_text(f, i, w);
    e["certified"] = f.factors[i].finality == Finality::Certified;
    arr.push_back(std::move(e));
  }
  j["factors"] = std::move(arr);
  j["residue"] = residue_text(f, w);
  if (f.stalled_at) {
    j["stalled_at"] = *f.stalled_at;
  } else {
    j["stalled_at"] = nullptr;
  }
  return j;
}

inline std::string csv_field(const std::string& text) {
  if (text.find(',') == std::string::npos) return text;
  return "\"" + text + "\"";
}

inline std::string factorization_to_csv(const Factorization& f, const Word& w) {
  std::string out = "index,start,len,text,certified\n";
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out += std::to_string(i + 1) + ',' + std::to_string(f.factors[i].start) + ',' +
           std::to_string(f.factors[i].len) + ',' + csv_field(factor_text(f, i, w)) + ',' +
           (f.factors[i].finality == Finality::Certified ? "true" : "false") + '\n';
  }
  return out;
}

inline std::string factorization_to_plain(const Factorization& f, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out += " | ";
    out += factor_text(f, i, w);
  }
  out += '\n';
  if (f.residue_start) out += "residue: " + residue_text(f, w) + '\n';
  if (f.stalled_at) out += "stalled_at: " + std::to_string(*f.stalled_at) + '\n';
  return out;
}

}  // namespace palfac
