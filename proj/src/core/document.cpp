#include "rst/core/document.hpp"

namespace rst {

std::vector<std::string> validate_document(const Document& doc) {
  std::vector<std::string> problems;
  const int n_tokens = static_cast<int>(doc.tokens.size());
  int previous_end = 0;
  for (std::size_t i = 0; i < doc.edus.size(); ++i) {
    const Edu& edu = doc.edus[i];
    const std::string where = "EDU " + std::to_string(i + 1);
    if (edu.index != static_cast<int>(i)) problems.push_back(where + ": index out of sequence");
    if (edu.tokens.empty()) problems.push_back(where + ": empty token span");
    if (edu.tokens.begin < 0 || edu.tokens.end > n_tokens)
      problems.push_back(where + ": token span out of bounds");
    if (edu.tokens.begin < previous_end) problems.push_back(where + ": overlaps previous EDU");
    previous_end = edu.tokens.end;
  }
  for (int t = 0; t < n_tokens; ++t) {
    const Token& tok = doc.tokens[static_cast<std::size_t>(t)];
    if (tok.head == kRootHead) continue;
    if (tok.head < 0 || tok.head >= n_tokens ||
        doc.tokens[static_cast<std::size_t>(tok.head)].sentence != tok.sentence)
      problems.push_back("token " + std::to_string(t + 1) + ": head outside its sentence");
  }
  if (doc.gold) {
    for (const auto& v : validate_tree(doc.gold->root(), doc.edu_count()))
      problems.push_back("gold tree: " + v.message);
  }
  return problems;
}

}  // namespace rst
