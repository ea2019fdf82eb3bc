#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "silver/corpus.hpp"
#include "silver/errors.hpp"
#include "silver/util.hpp"

namespace silver {

inline AnnotatedSentence tokenize_line(std::string_view line, std::string id) {
  AnnotatedSentence s;
  s.id = std::move(id);
  int index = 0;
  for (std::string& form : split_ws(line)) {
    Token tok;
    tok.index = index++;
    tok.form = std::move(form);
    s.tokens.push_back(std::move(tok));
  }
  return s;
}

inline std::vector<AnnotatedSentence> read_sentences(std::istream& in) {
  std::vector<AnnotatedSentence> out;
  std::string raw;
  while (std::getline(in, raw))
    out.push_back(tokenize_line(trim_cr(raw), std::to_string(out.size() + 1)));
  return out;
}

inline std::vector<AnnotatedSentence> read_sentences(const std::string& text) {
  std::istringstream in(text);
  return read_sentences(in);
}

// Zips two one-sentence-per-line streams. Pair id = 1-based line number.
inline Bitext read_bitext(std::istream& source, std::istream& target) {
  Bitext bitext;
  std::vector<AnnotatedSentence> src = read_sentences(source);
  std::vector<AnnotatedSentence> tgt = read_sentences(target);
  if (src.size() != tgt.size())
    throw ValidationError("bitext line counts differ: " + std::to_string(src.size()) +
                          " source vs " + std::to_string(tgt.size()) + " target");
  bitext.pairs.reserve(src.size());
  for (size_t k = 0; k < src.size(); ++k) {
    if (src[k].tokens.empty()) ++bitext.empty_source_lines;
    if (tgt[k].tokens.empty()) ++bitext.empty_target_lines;
    SentencePair pair;
    pair.id = std::to_string(k + 1);
    pair.source = std::move(src[k]);
    pair.target = std::move(tgt[k]);
    bitext.pairs.push_back(std::move(pair));
  }
  return bitext;
}

inline Bitext read_bitext(const std::string& source, const std::string& target) {
  std::istringstream src(source), tgt(target);
  return read_bitext(src, tgt);
}

// Pairs an annotated source corpus with target sentences, e.g. gold data
// with its machine translations. Pair ids are positional, like read_bitext.
inline Bitext make_bitext(std::vector<AnnotatedSentence> source,
                          std::vector<AnnotatedSentence> target) {
  if (source.size() != target.size())
    throw ValidationError("cannot pair corpora: " + std::to_string(source.size()) +
                          " source sentences vs " + std::to_string(target.size()) +
                          " target sentences");
  Bitext bitext;
  bitext.pairs.reserve(source.size());
  for (size_t k = 0; k < source.size(); ++k) {
    if (source[k].tokens.empty()) ++bitext.empty_source_lines;
    if (target[k].tokens.empty()) ++bitext.empty_target_lines;
    SentencePair pair;
    pair.id = std::to_string(k + 1);
    pair.source = std::move(source[k]);
    pair.target = std::move(target[k]);
    bitext.pairs.push_back(std::move(pair));
  }
  return bitext;
}

}  // namespace silver
