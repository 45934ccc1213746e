#include "generators.hpp"

#include <filesystem>

namespace rst::testing {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Label random_label(Rng& rng) {
  static constexpr Nuclearity kPatterns[] = {Nuclearity::NN, Nuclearity::NS, Nuclearity::SN};
  return Label{kPatterns[uniform_int(rng, 0, 2)], all_relations()[uniform_int(rng, 0, kRelationCount - 1)]};
}

NodePtr random_subtree(Rng& rng, int begin, int end) {
  if (end - begin == 1) return RstNode::leaf(begin);
  const int mid = uniform_int(rng, begin + 1, end - 1);
  NodePtr left = random_subtree(rng, begin, mid);
  NodePtr right = random_subtree(rng, mid, end);
  return RstNode::internal(std::move(left), std::move(right), random_label(rng));
}

RstTree random_tree(Rng& rng, int n_edus) { return RstTree(random_subtree(rng, 0, n_edus)); }

namespace {

NodePtr perturb_node(Rng& rng, const NodePtr& node) {
  if (node->is_leaf()) return node;
  const Span s = node->span();
  if (coin(rng, 0.15)) return random_subtree(rng, s.begin, s.end);
  Label label = node->label();
  if (coin(rng, 0.3)) label.nuclearity = random_label(rng).nuclearity;
  if (coin(rng, 0.3)) label.relation = random_label(rng).relation;
  return RstNode::internal(perturb_node(rng, node->left_ptr()), perturb_node(rng, node->right_ptr()), label);
}

Token token(std::string form, std::string pos, int head, int sentence) {
  Token t;
  t.lemma = form;
  t.form = std::move(form);
  t.pos = std::move(pos);
  t.head = head;
  t.sentence = sentence;
  return t;
}

RawNode internal_raw(std::vector<RawNode> children) {
  RawNode node;
  node.role = Role::Unknown;
  node.children = std::move(children);
  return node;
}

RawNode raw_range(Rng& rng, int begin, int end, int max_arity, const std::vector<std::string>& mono,
                  const std::vector<std::string>& multi) {
  if (end - begin == 1) return make_raw_leaf(begin, std::to_string(begin + 1), "edu " + std::to_string(begin + 1));
  const int size = end - begin;
  const int k = uniform_int(rng, 2, std::min(max_arity, size));
  std::vector<int> cuts;
  std::vector<int> all;
  for (int i = begin + 1; i < end; ++i) all.push_back(i);
  std::shuffle(all.begin(), all.end(), rng);
  cuts.assign(all.begin(), all.begin() + (k - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), begin);
  cuts.push_back(end);

  std::vector<RawNode> children;
  for (int i = 0; i < k; ++i) children.push_back(raw_range(rng, cuts[i], cuts[i + 1], max_arity, mono, multi));
  if (coin(rng, 0.3)) {
    const std::string& name = multi[uniform_int(rng, 0, static_cast<int>(multi.size()) - 1)];
    for (auto& c : children) {
      c.role = Role::Nucleus;
      c.relation = name;
    }
  } else {
    int nucleus = uniform_int(rng, 0, k - 1);
    if (k == 4 && coin(rng, 0.25)) nucleus = 1;
    for (int i = 0; i < k; ++i) {
      children[i].role = i == nucleus ? Role::Nucleus : Role::Satellite;
      children[i].relation = i == nucleus ? "span" : mono[uniform_int(rng, 0, static_cast<int>(mono.size()) - 1)];
    }
  }
  return internal_raw(std::move(children));
}

BinaryRawNode bleaf(int position) {
  BinaryRawNode n;
  n.position = position;
  return n;
}

BinaryRawNode bnode(BinaryRawNode l, BinaryRawNode r, Nuclearity nuc, std::string rel) {
  BinaryRawNode n;
  n.nuclearity = nuc;
  n.relation = std::move(rel);
  n.children.push_back(std::move(l));
  n.children.push_back(std::move(r));
  return n;
}

const char* const kPos[] = {"NOUN", "VERB", "ADJ", "DET", "ADP", "PRON", "ADV", "CCONJ", "SCONJ", "NUM", "PUNCT"};

}  // namespace

RstTree perturb(Rng& rng, const RstTree& tree) { return RstTree(perturb_node(rng, tree.root_ptr())); }

RstTree consumer_spending_tree() {
  return RstTree(RstNode::internal(
      RstNode::internal(RstNode::leaf(0), RstNode::leaf(1), Label{Nuclearity::NN, Relation::Comparison}),
      RstNode::leaf(2), Label{Nuclearity::NS, Relation::Attribution}));
}

Document consumer_spending_document() {
  Document doc;
  doc.id = "1384";
  doc.language = "en";
  // One sentence; "rose" is the root, EDU 2 hangs off it through "was",
  // EDU 3 through "estimated".
  struct T {
    const char* form;
    const char* pos;
    int head;
  };
  const T tokens[] = {
      {"Consumer", "NOUN", 1},  {"spending", "NOUN", 4}, {"in", "ADP", 3},         {"Britain", "PROPN", 1},
      {"rose", "VERB", -1},     {"0.1", "NUM", 6},       {"%", "SYM", 4},          {"in", "ADP", 10},
      {"the", "DET", 10},       {"third", "ADJ", 10},    {"quarter", "NOUN", 4},   {"from", "ADP", 14},
      {"the", "DET", 14},       {"second", "ADJ", 14},   {"quarter", "NOUN", 4},   {"and", "CCONJ", 16},
      {"was", "AUX", 4},        {"up", "ADV", 16},       {"3.8", "NUM", 19},       {"%", "SYM", 17},
      {"from", "ADP", 22},      {"a", "DET", 22},        {"year", "NOUN", 23},     {"ago", "ADV", 17},
      {",", "PUNCT", 16},       {"the", "DET", 28},      {"Central", "PROPN", 28}, {"Statistical", "PROPN", 28},
      {"Office", "PROPN", 29},  {"estimated", "VERB", 4}, {".", "PUNCT", 4},
  };
  for (const auto& t : tokens) doc.tokens.push_back(token(t.form, t.pos, t.head, 0));
  doc.edus = {
      Edu{0, "Consumer spending in Britain rose 0.1% in the third quarter from the second quarter", Span{0, 15}},
      Edu{1, "and was up 3.8% from a year ago,", Span{15, 25}},
      Edu{2, "the Central Statistical Office estimated.", Span{25, 31}},
  };
  doc.gold = consumer_spending_tree();
  return doc;
}

RawNode random_raw_tree(Rng& rng, int n_leaves, int max_arity, const std::vector<std::string>& mono_names,
                        const std::vector<std::string>& multi_names) {
  RawNode root = raw_range(rng, 0, n_leaves, max_arity, mono_names, multi_names);
  root.role = Role::Root;
  root.relation.clear();
  return root;
}

RawNode four_child_raw(const std::string& ri, const std::string& rj, const std::string& rk) {
  std::vector<RawNode> children;
  const Role roles[] = {Role::Satellite, Role::Nucleus, Role::Satellite, Role::Satellite};
  const std::string rels[] = {ri, "span", rj, rk};
  for (int i = 0; i < 4; ++i) {
    RawNode leaf = make_raw_leaf(i, std::to_string(i + 1), "unit " + std::to_string(i + 1));
    leaf.role = roles[i];
    leaf.relation = rels[i];
    children.push_back(std::move(leaf));
  }
  RawNode root = internal_raw(std::move(children));
  root.role = Role::Root;
  return root;
}

BinaryRawNode four_child_expected(const std::string& ri, const std::string& rj, const std::string& rk) {
  return bnode(bleaf(0),
               bnode(bnode(bleaf(1), bleaf(2), Nuclearity::NS, rj), bleaf(3), Nuclearity::NS, rk),
               Nuclearity::SN, ri);
}

Document synthetic_document(Rng& rng, const std::string& id, int n_edus, bool with_tree, int vocabulary_size,
                            const std::string& language) {
  Document doc;
  doc.id = id;
  doc.language = language;
  int sentence = 0;
  int sentence_root = -1;
  for (int e = 0; e < n_edus; ++e) {
    const bool new_sentence = e == 0 || sentence_root < 0 || coin(rng, 0.6);
    if (new_sentence && e > 0) ++sentence;
    if (new_sentence) sentence_root = -1;
    const int len = uniform_int(rng, 1, 6);
    const int begin = static_cast<int>(doc.tokens.size());
    std::string text;
    for (int i = 0; i < len; ++i) {
      std::string form = "w" + std::to_string(uniform_int(rng, 0, vocabulary_size - 1));
      if (coin(rng, 0.05)) form = std::to_string(uniform_int(rng, 1, 99));
      const int idx = static_cast<int>(doc.tokens.size());
      int head;
      if (i == 0) {
        head = sentence_root < 0 ? kRootHead : sentence_root;
        if (sentence_root < 0) sentence_root = idx;
      } else {
        head = begin;
      }
      if (!text.empty()) text += ' ';
      text += form;
      doc.tokens.push_back(token(form, kPos[uniform_int(rng, 0, 10)], head, sentence));
    }
    doc.edus.push_back(Edu{e, text, Span{begin, begin + len}});
  }
  if (with_tree) doc.gold = random_tree(rng, n_edus);
  return doc;
}

std::vector<Document> synthetic_corpus(Rng& rng, const std::string& prefix, int docs, int min_edus, int max_edus,
                                       const std::string& language) {
  std::vector<Document> out;
  for (int i = 0; i < docs; ++i)
    out.push_back(synthetic_document(rng, prefix + std::to_string(i), uniform_int(rng, min_edus, max_edus), true,
                                     200, language));
  return out;
}

std::string temp_dir(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path p = fs::temp_directory_path() / ("rst_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

}  // namespace rst::testing
