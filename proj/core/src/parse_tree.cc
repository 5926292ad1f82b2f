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

#include "claudette/parse_tree.h"

#include <cctype>
#include <functional>

#include "claudette/corpus.h"
#include "claudette/error.h"

namespace claudette {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ParseTree Parse() {
    SkipSpace();
    if (pos_ >= text_.size()) throw Error(ErrorKind::kEmptyNode, "empty tree text");
    ParseTree tree;
    if (text_[pos_] == ')') Fail(ErrorKind::kUnbalancedParens, "unexpected ')'");
    if (text_[pos_] != '(') {
      tree.nodes_.push_back({std::string(Atom()), {}});
    } else {
      ParseNode(&tree);
      Unwrap(&tree);
    }
    SkipSpace();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') Fail(ErrorKind::kUnbalancedParens, "unexpected ')'");
      Fail(ErrorKind::kTrailingInput, "trailing input after tree");
    }
    return tree;
  }

 private:
  [[noreturn]] void Fail(ErrorKind kind, const std::string &message) const {
    throw Error(kind, message + " at offset " + std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view Atom() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(begin, pos_ - begin);
  }

  // Expects text_[pos_] == '('. Returns the new node id.
  int ParseNode(ParseTree *tree) {
    ++pos_;
    SkipSpace();
    int id = static_cast<int>(tree->nodes_.size());
    tree->nodes_.push_back({});
    if (pos_ >= text_.size()) Fail(ErrorKind::kUnbalancedParens, "missing ')'");
    if (text_[pos_] != '(' && text_[pos_] != ')') {
      tree->nodes_[static_cast<std::size_t>(id)].label = std::string(Atom());
    }
    std::vector<int> children;
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) Fail(ErrorKind::kUnbalancedParens, "missing ')'");
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        children.push_back(ParseNode(tree));
      } else {
        int leaf = static_cast<int>(tree->nodes_.size());
        tree->nodes_.push_back({std::string(Atom()), {}});
        children.push_back(leaf);
      }
    }
    ParseTree::Node &node = tree->nodes_[static_cast<std::size_t>(id)];
    if (children.empty()) Fail(ErrorKind::kEmptyNode, "node without children");
    if (node.label.empty() && id != 0) Fail(ErrorKind::kEmptyNode, "node without label");
    node.children = std::move(children);
    return id;
  }

  // "( (S ...))" style wrappers: drop an unlabeled root with a single child.
  void Unwrap(ParseTree *tree) {
    const ParseTree::Node &root = tree->nodes_[0];
    if (!root.label.empty()) return;
    if (root.children.size() != 1 || tree->IsLeaf(root.children[0])) {
      Fail(ErrorKind::kEmptyNode, "unlabeled root");
    }
    ParseTree out;
    std::function<int(int)> copy = [&](int i) {
      int id = static_cast<int>(out.nodes_.size());
      out.nodes_.push_back({tree->node(i).label, {}});
      std::vector<int> kids;
      for (int c : tree->node(i).children) kids.push_back(copy(c));
      out.nodes_[static_cast<std::size_t>(id)].children = std::move(kids);
      return id;
    };
    copy(root.children[0]);
    *tree = std::move(out);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ParseTree ParseTree::Leaf(std::string word) {
  ParseTree tree;
  tree.nodes_.push_back({std::move(word), {}});
  return tree;
}

std::string ParseTree::Production(int i) const {
  std::string out = node(i).label;
  for (int c : node(i).children) {
    out += ' ';
    out += node(c).label;
  }
  return out;
}

std::vector<int> ParseTree::Preterminals() const {
  std::vector<int> out;
  // Preorder storage means ascending ids are left-to-right.
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (IsPreterminal(i)) out.push_back(i);
  }
  return out;
}

std::string ParseTree::ToString() const {
  if (nodes_.empty()) return "";
  std::string out;
  std::function<void(int)> write = [&](int i) {
    const Node &n = node(i);
    if (n.children.empty()) {
      out += n.label;
      return;
    }
    out += '(';
    out += n.label;
    for (int c : n.children) {
      out += ' ';
      write(c);
    }
    out += ')';
  };
  write(0);
  return out;
}

bool ParseTree::operator==(const ParseTree &other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label != other.nodes_[i].label ||
        nodes_[i].children != other.nodes_[i].children) {
      return false;
    }
  }
  return true;
}

ParseTree ParseBracketed(std::string_view text) { return TreeParser(text).Parse(); }

void TreeBank::Add(std::string document, std::vector<ParseTree> trees) {
  trees_[std::move(document)] = std::move(trees);
}

const std::vector<ParseTree> *TreeBank::Find(const std::string &document) const {
  auto it = trees_.find(document);
  return it == trees_.end() ? nullptr : &it->second;
}

std::vector<std::vector<ParseTree>> ParseTreeGroups(std::string_view text) {
  std::vector<std::vector<ParseTree>> groups;
  std::vector<ParseTree> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank) {
      if (!current.empty()) groups.push_back(std::move(current));
      current.clear();
    } else {
      try {
        current.push_back(ParseBracketed(line));
      } catch (const Error &e) {
        throw Error(e.kind(), "tree line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    pos = nl + 1;
  }
  if (!current.empty()) groups.push_back(std::move(current));
  return groups;
}

std::vector<std::vector<ParseTree>> ReadTreeGroups(const std::filesystem::path &path) {
  return ParseTreeGroups(ReadFile(path));
}

std::string WriteTreeGroups(const std::vector<std::vector<ParseTree>> &groups) {
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g > 0) out += '\n';
    for (const ParseTree &tree : groups[g]) {
      out += tree.ToString();
      out += '\n';
    }
  }
  return out;
}

TreeBank AlignTreeBank(const Corpus &corpus,
                       std::vector<std::vector<ParseTree>> groups) {
  if (groups.size() != corpus.num_documents()) {
    throw Error(ErrorKind::kTreeBankMismatch,
                "tree bank has " + std::to_string(groups.size()) +
                    " documents, corpus has " +
                    std::to_string(corpus.num_documents()));
  }
  TreeBank bank;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    const Document &doc = corpus.document(d);
    if (groups[d].size() != doc.sentences.size()) {
      throw Error(ErrorKind::kTreeBankMismatch,
                  doc.name + ": " + std::to_string(groups[d].size()) +
                      " trees for " + std::to_string(doc.sentences.size()) +
                      " sentences");
    }
    bank.Add(doc.name, std::move(groups[d]));
  }
  return bank;
}

}  // namespace claudette
