#pragma once

#include <optional>
#include <string>
#include <vector>

#include "silver/errors.hpp"

namespace silver {

// Head sentinel for the token governed by the (virtual) root.
inline constexpr int kRootHead = -1;

struct Token {
  int index = 0;
  std::string form;
  std::optional<std::string> upos;
  std::optional<int> head;  // kRootHead or a 0-based token index
  std::optional<std::string> deprel;
};

// Contiguous token range, both ends inclusive.
struct Span {
  int start = 0;
  int end = 0;
  std::string label;

  int length() const { return end - start + 1; }
  bool overlaps(const Span& other) const {
    return start <= other.end && other.start <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Argument {
  Span span;
  std::string role;
  int trigger = 0;  // index into EventStructure::triggers
  friend bool operator==(const Argument&, const Argument&) = default;
};

// Two-level tree under a virtual root: triggers at depth 1, arguments at
// depth 2 attached to their trigger. The shape is fixed by construction.
struct EventStructure {
  std::vector<Span> triggers;
  std::vector<Argument> arguments;
  friend bool operator==(const EventStructure&, const EventStructure&) = default;
};

struct AnnotatedSentence {
  std::string id;
  std::vector<Token> tokens;
  std::optional<std::vector<std::string>> bio;
  std::optional<EventStructure> events;

  int size() const { return static_cast<int>(tokens.size()); }

  std::vector<std::string> forms() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.form);
    return out;
  }

  bool has_tree() const {
    if (tokens.empty()) return false;
    for (const Token& t : tokens)
      if (!t.head || !t.deprel) return false;
    return true;
  }

  bool has_upos() const {
    if (tokens.empty()) return false;
    for (const Token& t : tokens)
      if (!t.upos) return false;
    return true;
  }
};

struct SentencePair {
  std::string id;
  AnnotatedSentence source;
  AnnotatedSentence target;
};

struct Bitext {
  std::vector<SentencePair> pairs;
  // Empty translation lines are kept as zero-token sentences so pair ids
  // stay stable; these counters let callers surface a warning.
  size_t empty_source_lines = 0;
  size_t empty_target_lines = 0;
};

inline void validate_span(const Span& span, int sentence_len,
                          const std::string& context) {
  if (span.start < 0 || span.start > span.end || span.end >= sentence_len)
    throw ValidationError(context + ": span [" + std::to_string(span.start) + "," +
                          std::to_string(span.end) + "] out of bounds for length " +
                          std::to_string(sentence_len));
}

// Heads must point at real tokens and form one single-rooted acyclic tree.
// Sentences either carry no heads at all or a head on every token.
inline void validate_tree(const AnnotatedSentence& sentence) {
  const int n = sentence.size();
  int with_head = 0;
  for (const Token& t : sentence.tokens)
    if (t.head) ++with_head;
  if (with_head == 0) return;
  if (with_head != n)
    throw ValidationError("sentence " + sentence.id + ": partial dependency tree (" +
                          std::to_string(with_head) + " of " + std::to_string(n) +
                          " tokens have a head)");
  int roots = 0;
  for (const Token& t : sentence.tokens) {
    int h = *t.head;
    if (h == kRootHead) {
      ++roots;
      continue;
    }
    if (h < 0 || h >= n)
      throw ValidationError("sentence " + sentence.id + ": head " +
                            std::to_string(h + 1) + " of token " +
                            std::to_string(t.index + 1) + " out of range");
    if (h == t.index)
      throw ValidationError("sentence " + sentence.id + ": token " +
                            std::to_string(t.index + 1) + " is its own head");
  }
  if (roots != 1)
    throw ValidationError("sentence " + sentence.id + ": expected exactly one root, found " +
                          std::to_string(roots));
  // Cycle check by walking every head chain up to the root.
  for (int start = 0; start < n; ++start) {
    int steps = 0;
    int cur = start;
    while (cur != kRootHead) {
      cur = *sentence.tokens[static_cast<size_t>(cur)].head;
      if (++steps > n)
        throw ValidationError("sentence " + sentence.id +
                              ": dependency heads form a cycle through token " +
                              std::to_string(start + 1));
    }
  }
}

inline void validate_events(const AnnotatedSentence& sentence) {
  if (!sentence.events) return;
  const EventStructure& ev = *sentence.events;
  for (const Span& trig : ev.triggers)
    validate_span(trig, sentence.size(), "sentence " + sentence.id + " trigger");
  for (const Argument& arg : ev.arguments) {
    validate_span(arg.span, sentence.size(), "sentence " + sentence.id + " argument");
    if (arg.trigger < 0 || arg.trigger >= static_cast<int>(ev.triggers.size()))
      throw ValidationError("sentence " + sentence.id + ": argument refers to trigger " +
                            std::to_string(arg.trigger) + " but there are only " +
                            std::to_string(ev.triggers.size()) + " triggers");
  }
}

inline void validate_sentence(const AnnotatedSentence& sentence) {
  if (sentence.bio && sentence.bio->size() != sentence.tokens.size())
    throw ValidationError("sentence " + sentence.id + ": " +
                          std::to_string(sentence.bio->size()) + " BIO tags for " +
                          std::to_string(sentence.tokens.size()) + " tokens");
  validate_tree(sentence);
  validate_events(sentence);
}

}  // namespace silver
