// Copyright 2026 The Claudette Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLAUDETTE_PARSE_TREE_H_
#define CLAUDETTE_PARSE_TREE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace claudette {

class Corpus;

// Labeled ordered tree read from Penn-style bracketed notation. Nodes are
// stored in preorder; node 0 is the root.
class ParseTree {
 public:
  struct Node {
    std::string label;
    std::vector<int> children;
  };

  ParseTree() = default;

  // A tree consisting of one bare leaf.
  static ParseTree Leaf(std::string word);

  int root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Node &node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  bool IsLeaf(int i) const { return node(i).children.empty(); }
  bool IsPreterminal(int i) const {
    const Node &n = node(i);
    return n.children.size() == 1 && IsLeaf(n.children[0]);
  }

  // Node label followed by the ordered child labels, space separated.
  std::string Production(int i) const;

  // Preterminal node ids, left to right.
  std::vector<int> Preterminals() const;

  // Canonical single-space bracketed form.
  std::string ToString() const;

  bool operator==(const ParseTree &other) const;

 private:
  friend class TreeParser;
  std::vector<Node> nodes_;
};

// Throws Error with kUnbalancedParens, kEmptyNode or kTrailingInput.
ParseTree ParseBracketed(std::string_view text);

// Document name -> trees aligned 1:1 with that document's sentences.
class TreeBank {
 public:
  TreeBank() = default;

  void Add(std::string document, std::vector<ParseTree> trees);
  const std::vector<ParseTree> *Find(const std::string &document) const;
  std::size_t num_documents() const { return trees_.size(); }

 private:
  std::map<std::string, std::vector<ParseTree>> trees_;
};

// One tree per line; a blank line separates documents.
std::vector<std::vector<ParseTree>> ParseTreeGroups(std::string_view text);
std::vector<std::vector<ParseTree>> ReadTreeGroups(const std::filesystem::path &path);
std::string WriteTreeGroups(const std::vector<std::vector<ParseTree>> &groups);

// Pairs groups with the corpus documents in corpus order and checks that
// each group has exactly one tree per sentence (kTreeBankMismatch otherwise).
TreeBank AlignTreeBank(const Corpus &corpus,
                       std::vector<std::vector<ParseTree>> groups);

}  // namespace claudette

#endif  // CLAUDETTE_PARSE_TREE_H_
