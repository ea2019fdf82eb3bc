#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "silver/corpus.hpp"
#include "silver/errors.hpp"
#include "silver/util.hpp"

namespace silver {

// One token+tag per line, blank line between sentences. Used both for BIO
// sequences (tags land in `bio`) and for plain per-token tag files such as
// POS data (tags land in `upos`); the wire format is identical.
enum class TagColumn { kBio, kUpos };

inline std::vector<AnnotatedSentence> read_tagged(std::istream& in,
                                                  TagColumn column) {
  std::vector<AnnotatedSentence> sentences;
  AnnotatedSentence current;
  std::vector<std::string> tags;
  size_t line_no = 0;

  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.id = std::to_string(sentences.size() + 1);
    if (column == TagColumn::kBio) current.bio = tags;
    sentences.push_back(std::move(current));
    current = {};
    tags.clear();
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_cr(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::string> cols = split_ws(line);
    if (cols.size() != 2)
      throw ParseError("expected 2 columns, got " + std::to_string(cols.size()),
                       line_no);
    Token tok;
    tok.index = current.size();
    tok.form = cols[0];
    if (column == TagColumn::kUpos) tok.upos = cols[1];
    current.tokens.push_back(std::move(tok));
    tags.push_back(cols[1]);
  }
  flush();
  return sentences;
}

// Tags are taken verbatim: projected or externally produced files may hold
// invalid sequences that only become valid after repair.
inline std::vector<AnnotatedSentence> read_bio(std::istream& in) {
  return read_tagged(in, TagColumn::kBio);
}

inline std::vector<AnnotatedSentence> read_bio(const std::string& text) {
  std::istringstream in(text);
  return read_bio(in);
}

inline std::vector<AnnotatedSentence> read_pos_tags(std::istream& in) {
  return read_tagged(in, TagColumn::kUpos);
}

inline std::vector<AnnotatedSentence> read_pos_tags(const std::string& text) {
  std::istringstream in(text);
  return read_pos_tags(in);
}

inline void write_bio(const std::vector<AnnotatedSentence>& sentences,
                      std::ostream& out) {
  for (const AnnotatedSentence& s : sentences) {
    if (!s.bio)
      throw ValidationError("sentence " + s.id + ": missing bio tags");
    if (s.bio->size() != s.tokens.size())
      throw ValidationError("sentence " + s.id + ": " + std::to_string(s.bio->size()) +
                            " BIO tags for " + std::to_string(s.tokens.size()) +
                            " tokens");
    for (size_t k = 0; k < s.tokens.size(); ++k)
      out << s.tokens[k].form << '\t' << (*s.bio)[k] << '\n';
    out << '\n';
  }
}

inline std::string write_bio(const std::vector<AnnotatedSentence>& sentences) {
  std::ostringstream out;
  write_bio(sentences, out);
  return out.str();
}

inline void write_pos_tags(const std::vector<AnnotatedSentence>& sentences,
                           std::ostream& out) {
  for (const AnnotatedSentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (!t.upos)
        throw ValidationError("sentence " + s.id + ": token " +
                              std::to_string(t.index + 1) + " missing upos");
      out << t.form << '\t' << *t.upos << '\n';
    }
    out << '\n';
  }
}

inline std::string write_pos_tags(const std::vector<AnnotatedSentence>& sentences) {
  std::ostringstream out;
  write_pos_tags(sentences, out);
  return out.str();
}

// --- BIO tag structure ------------------------------------------------

enum class BioKind { kOutside, kBegin, kInside };

struct BioTag {
  BioKind kind = BioKind::kOutside;
  std::string type;  // empty for O
};

inline BioTag parse_bio_tag(const std::string& tag) {
  if (tag == "O") return {BioKind::kOutside, ""};
  if (tag.size() >= 3 && tag[1] == '-') {
    if (tag[0] == 'B') return {BioKind::kBegin, tag.substr(2)};
    if (tag[0] == 'I') return {BioKind::kInside, tag.substr(2)};
  }
  throw ValidationError("tag '" + tag + "' is not O, B-<type> or I-<type>");
}

inline std::string bio_tag_string(BioKind kind, const std::string& type) {
  switch (kind) {
    case BioKind::kOutside: return "O";
    case BioKind::kBegin: return "B-" + type;
    case BioKind::kInside: return "I-" + type;
  }
  return "O";
}

inline bool is_valid_bio(const std::vector<std::string>& tags) {
  std::string open_type;
  bool open = false;
  for (const std::string& tag : tags) {
    BioTag t = parse_bio_tag(tag);
    switch (t.kind) {
      case BioKind::kOutside: open = false; break;
      case BioKind::kBegin:
        open = true;
        open_type = t.type;
        break;
      case BioKind::kInside:
        if (!open || open_type != t.type) return false;
        break;
    }
  }
  return true;
}

// Strict decode: requires a valid sequence (run repair first otherwise).
inline std::vector<Span> decode_bio(const std::vector<std::string>& tags) {
  std::vector<Span> spans;
  for (size_t i = 0; i < tags.size(); ++i) {
    BioTag t = parse_bio_tag(tags[i]);
    switch (t.kind) {
      case BioKind::kOutside: break;
      case BioKind::kBegin:
        spans.push_back({static_cast<int>(i), static_cast<int>(i), t.type});
        break;
      case BioKind::kInside:
        if (spans.empty() || spans.back().end != static_cast<int>(i) - 1 ||
            spans.back().label != t.type)
          throw ValidationError("invalid BIO transition at token " +
                                std::to_string(i + 1) + " ('" + tags[i] + "')");
        spans.back().end = static_cast<int>(i);
        break;
    }
  }
  return spans;
}

// Inverse of decode_bio; spans must be sorted and non-overlapping.
inline std::vector<std::string> encode_bio(const std::vector<Span>& spans, int length) {
  std::vector<std::string> tags(static_cast<size_t>(length), "O");
  for (const Span& span : spans) {
    validate_span(span, length, "encode_bio");
    tags[static_cast<size_t>(span.start)] = bio_tag_string(BioKind::kBegin, span.label);
    for (int i = span.start + 1; i <= span.end; ++i)
      tags[static_cast<size_t>(i)] = bio_tag_string(BioKind::kInside, span.label);
  }
  return tags;
}

}  // namespace silver
