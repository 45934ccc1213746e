#include "rst/model/model.hpp"

#include <zlib.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "rst/error.hpp"
#include "rst/text.hpp"

namespace rst {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr std::string_view kMagic = "RSTPARSE";
constexpr std::uint32_t kFormatVersion = 1;

// Slot offsets into the concatenated input vector.
struct Layout {
  std::array<SymbolType, kSequenceLength> type{};
  std::array<int, kSequenceLength> offset{};
  std::array<int, kSequenceLength> width{};
  int total = 0;

  explicit Layout(const Dimensions& dims) {
    const auto& slots = template_layout();
    for (int i = 0; i < kSequenceLength; ++i) {
      type[i] = slots[i].type;
      width[i] = dims.width[static_cast<int>(type[i])];
      offset[i] = total;
      total += width[i];
    }
  }
};

struct Activations {
  VectorXd x, z1, h1, z2, h2, logp;
};

struct Deltas {
  VectorXd dlogits, dz2, dz1, dx;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % n;
}

void fill_uniform(MatrixXd& m, double scale, std::mt19937_64& rng) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = (2.0 * uniform01(rng) - 1.0) * scale;
}

VectorXd relu(const VectorXd& z) { return z.cwiseMax(0.0); }

void log_softmax(const VectorXd& logits, VectorXd& out) {
  const double m = logits.maxCoeff();
  const double lse = m + std::log((logits.array() - m).exp().sum());
  out = logits.array() - lse;
}

void forward(const Parameters& p, const Layout& layout, const InputIds& ids, Activations& a) {
  a.x.setZero(layout.total);
  for (int i = 0; i < kSequenceLength; ++i) {
    const int id = ids[i];
    if (id == Vocabulary::kNoneId) continue;
    const auto& table = p.embedding[static_cast<int>(layout.type[i])];
    a.x.segment(layout.offset[i], layout.width[i]) = table.row(id).transpose();
  }
  a.z1.noalias() = p.w1 * a.x;
  a.z1 += p.b1;
  a.h1 = relu(a.z1);
  a.z2.noalias() = p.w2 * a.h1;
  a.z2 += p.b2;
  a.h2 = relu(a.z2);
  VectorXd logits = p.wo * a.h2 + p.bo;
  log_softmax(logits, a.logp);
}

// Gradients of -log p(gold) with respect to the pre-activations and input.
void backward(const Parameters& p, const Activations& a, int gold, double scale, Deltas& d) {
  d.dlogits = a.logp.array().exp() * scale;
  d.dlogits(gold) -= scale;
  VectorXd dh2 = p.wo.transpose() * d.dlogits;
  d.dz2 = (a.z2.array() > 0.0).select(dh2, 0.0);
  VectorXd dh1 = p.w2.transpose() * d.dz2;
  d.dz1 = (a.z1.array() > 0.0).select(dh1, 0.0);
  d.dx.noalias() = p.w1.transpose() * d.dz1;
}

class Writer {
 public:
  void u32(std::uint32_t v) { raw(&v, sizeof v); }
  void u64(std::uint64_t v) { raw(&v, sizeof v); }
  void f64(double v) { raw(&v, sizeof v); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.append(s.data(), s.size());
  }
  void matrix(const MatrixXd& m) {
    u32(static_cast<std::uint32_t>(m.rows()));
    u32(static_cast<std::uint32_t>(m.cols()));
    raw(m.data(), sizeof(double) * m.size());
  }
  void raw(const void* p, std::size_t n) { out_.append(static_cast<const char*>(p), n); }
  std::string& bytes() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint32_t u32() { return get<std::uint32_t>(); }
  std::uint64_t u64() { return get<std::uint64_t>(); }
  double f64() { return get<double>(); }
  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  MatrixXd matrix() {
    const std::uint32_t r = u32();
    const std::uint32_t c = u32();
    need(static_cast<std::size_t>(r) * c * sizeof(double));
    MatrixXd m(r, c);
    std::memcpy(m.data(), in_.data() + pos_, sizeof(double) * m.size());
    pos_ += sizeof(double) * m.size();
    return m;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  template <typename T>
  T get() {
    need(sizeof(T));
    T v;
    std::memcpy(&v, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw DataError("model file is truncated");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

std::uint32_t crc(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

}  // namespace

// ---- Vocabulary ----

Vocabulary::Vocabulary() {
  add(std::string(kNone));
  add("<UNK>");
}

int Vocabulary::add(const std::string& value) {
  auto [it, inserted] = ids_.emplace(value, static_cast<int>(items_.size()));
  if (inserted) items_.push_back(value);
  return it->second;
}

int Vocabulary::id(std::string_view value) const {
  auto it = ids_.find(value);
  return it == ids_.end() ? kUnkId : it->second;
}

std::optional<int> Vocabulary::find(std::string_view value) const {
  auto it = ids_.find(value);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int Dimensions::input_width() const { return Layout(*this).total; }

// ---- Parameters ----

Parameters Parameters::zeros_like(const Parameters& like) {
  Parameters p;
  for (std::size_t t = 0; t < kSymbolTypeCount; ++t)
    p.embedding[t] = MatrixXd::Zero(like.embedding[t].rows(), like.embedding[t].cols());
  p.w1 = MatrixXd::Zero(like.w1.rows(), like.w1.cols());
  p.w2 = MatrixXd::Zero(like.w2.rows(), like.w2.cols());
  p.wo = MatrixXd::Zero(like.wo.rows(), like.wo.cols());
  p.b1 = VectorXd::Zero(like.b1.size());
  p.b2 = VectorXd::Zero(like.b2.size());
  p.bo = VectorXd::Zero(like.bo.size());
  return p;
}

std::string_view Parameters::block_name(int block) {
  static constexpr std::array<std::string_view, kBlockCount> names{
      "emb.word", "emb.pos", "emb.position", "emb.length", "emb.flag", "emb.label",
      "w1", "b1", "w2", "b2", "wo", "bo"};
  return names.at(block);
}

namespace {
template <typename P>
auto block_of(P& p, int block) {
  using Map = std::conditional_t<std::is_const_v<P>, Eigen::Map<const VectorXd>, Eigen::Map<VectorXd>>;
  auto map = [](auto& m) { return Map(m.data(), m.size()); };
  if (block < static_cast<int>(kSymbolTypeCount)) return map(p.embedding[block]);
  switch (block) {
    case 6: return map(p.w1);
    case 7: return map(p.b1);
    case 8: return map(p.w2);
    case 9: return map(p.b2);
    case 10: return map(p.wo);
    case 11: return map(p.bo);
  }
  throw InvariantError("no parameter block " + std::to_string(block));
}
}  // namespace

Eigen::Map<VectorXd> Parameters::block(int b) { return block_of(*this, b); }
Eigen::Map<const VectorXd> Parameters::block(int b) const { return block_of(*this, b); }

// ---- Hyperparams ----

std::string Hyperparams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "lr=" << learning_rate << " decay=" << decay << " epochs=" << epochs << " beam=" << beam
     << " seed=" << seed;
  return os.str();
}

// ---- Model ----

Model::Model(Vocabularies vocab, ActionSet actions, Dimensions dims, std::uint64_t seed,
             double init_scale)
    : vocab_(std::move(vocab)), actions_(std::move(actions)), dims_(dims) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < kSymbolTypeCount; ++t) {
    MatrixXd& e = params_.embedding[t];
    e.resize(vocab_[t].size(), dims_.width[t]);
    fill_uniform(e, init_scale, rng);
    e.row(Vocabulary::kNoneId).setZero();
  }
  params_.w1.resize(dims_.hidden1, dims_.input_width());
  params_.w2.resize(dims_.hidden2, dims_.hidden1);
  params_.wo.resize(static_cast<Eigen::Index>(actions_.size()), dims_.hidden2);
  fill_uniform(params_.w1, init_scale, rng);
  fill_uniform(params_.w2, init_scale, rng);
  fill_uniform(params_.wo, init_scale, rng);
  params_.b1 = VectorXd::Zero(dims_.hidden1);
  params_.b2 = VectorXd::Zero(dims_.hidden2);
  params_.bo = VectorXd::Zero(static_cast<Eigen::Index>(actions_.size()));
}

InputIds Model::encode(const SymbolSequence& symbols) const {
  const auto& layout = template_layout();
  InputIds ids;
  for (int i = 0; i < kSequenceLength; ++i)
    ids[i] = symbols[i] == kNone ? Vocabulary::kNoneId
                                 : vocab_[static_cast<int>(layout[i].type)].id(symbols[i]);
  return ids;
}

EncodedDocument Model::encode(const DocumentFeatures& features) const {
  EncodedDocument out;
  out.edus.resize(features.edu_count());
  for (int e = 0; e < features.edu_count(); ++e) {
    const EduSymbols& s = features.edu(e);
    for (int i = 0; i < edu_slot::kCount; ++i)
      out.edus[e][i] = s[i] == kNone ? Vocabulary::kNoneId
                                     : vocab_[static_cast<int>(edu_symbol_type(i))].id(s[i]);
  }
  return out;
}

InputIds Model::input(const Configuration& c, const EncodedDocument& doc) const {
  const ConfigSlots slots = config_slots(c);
  InputIds ids;
  int k = 0;
  for (int slot = 0; slot < kEduSlotCount; ++slot) {
    const int edu = slots.edu[slot];
    for (int i = 0; i < edu_slot::kCount; ++i)
      ids[k++] = edu < 0 ? Vocabulary::kNoneId : doc.edus.at(edu)[i];
  }
  const Vocabulary& labels = vocab_[static_cast<int>(SymbolType::Label)];
  for (const auto& label : slots.label) ids[k++] = label ? labels.id(to_string(*label)) : Vocabulary::kNoneId;
  return ids;
}

Eigen::VectorXd Model::log_probabilities(const InputIds& x) const {
  Activations a;
  forward(params_, Layout(dims_), x, a);
  return a.logp;
}

Eigen::VectorXd Model::probabilities(const InputIds& x) const {
  return log_probabilities(x).array().exp();
}

Vocabularies build_vocabularies(const std::vector<SymbolSequence>& inputs, const ActionSet& actions) {
  Vocabularies v;
  const auto& layout = template_layout();
  for (const auto& seq : inputs)
    for (int i = 0; i < kSequenceLength; ++i)
      if (seq[i] != kNone && layout[i].type != SymbolType::Label)
        v[static_cast<int>(layout[i].type)].add(seq[i]);
  for (const auto& a : actions.actions())
    if (!a.is_shift()) v[static_cast<int>(SymbolType::Label)].add(to_string(a.label));
  return v;
}

// ---- Loss and gradient ----

double loss(const Model& model, const std::vector<Example>& batch) {
  if (batch.empty()) return 0.0;
  const Layout layout(model.dims());
  Activations a;
  double total = 0.0;
  for (const auto& ex : batch) {
    forward(model.params(), layout, ex.x, a);
    total -= a.logp(ex.gold);
  }
  return total / static_cast<double>(batch.size());
}

Parameters gradient(const Model& model, const std::vector<Example>& batch) {
  const Parameters& p = model.params();
  Parameters g = Parameters::zeros_like(p);
  if (batch.empty()) return g;
  const Layout layout(model.dims());
  const double scale = 1.0 / static_cast<double>(batch.size());
  Activations a;
  Deltas d;
  for (const auto& ex : batch) {
    forward(p, layout, ex.x, a);
    backward(p, a, ex.gold, scale, d);
    g.wo.noalias() += d.dlogits * a.h2.transpose();
    g.bo += d.dlogits;
    g.w2.noalias() += d.dz2 * a.h1.transpose();
    g.b2 += d.dz2;
    g.w1.noalias() += d.dz1 * a.x.transpose();
    g.b1 += d.dz1;
    for (int i = 0; i < kSequenceLength; ++i) {
      if (ex.x[i] == Vocabulary::kNoneId) continue;
      g.embedding[static_cast<int>(layout.type[i])].row(ex.x[i]) +=
          d.dx.segment(layout.offset[i], layout.width[i]).transpose();
    }
  }
  return g;
}

double learning_rate(double eta0, double decay, long t) {
  return eta0 / (1.0 + decay * static_cast<double>(t));
}

// ---- Training ----

void seeded_shuffle(std::vector<std::size_t>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[bounded(rng, i)]);
}

namespace {

// avg = w - U / T where U accumulates (s - 1) * delta_s over updates s.
Model averaged(const Model& current, const Parameters& u, long updates) {
  Model out = current;
  if (updates == 0) return out;
  const double inv = 1.0 / static_cast<double>(updates);
  for (int b = 0; b < Parameters::kBlockCount; ++b) out.params().block(b) -= inv * u.block(b);
  return out;
}

}  // namespace

Model train(const Model& initial, const std::vector<Example>& examples, const TrainOptions& opt) {
  if (examples.empty()) throw DataError("no training examples");
  Model model = initial;
  Parameters& p = model.params();
  Parameters u = Parameters::zeros_like(p);
  const Layout layout(model.dims());
  const int word_type = static_cast<int>(SymbolType::Word);

  std::mt19937_64 rng(opt.seed);
  std::vector<std::size_t> order(examples.size());
  Activations a;
  Deltas d;
  long t = 0;
  for (int epoch = 1; epoch <= opt.epochs; ++epoch) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[bounded(rng, i)]);

    double epoch_loss = 0.0;
    for (std::size_t idx : order) {
      const Example& ex = examples[idx];
      forward(p, layout, ex.x, a);
      epoch_loss -= a.logp(ex.gold);
      backward(p, a, ex.gold, 1.0, d);

      const double eta = learning_rate(opt.learning_rate, opt.decay, t);
      const double w_u = static_cast<double>(t) * -eta;  // (s - 1) * delta / grad
      p.wo.noalias() -= eta * d.dlogits * a.h2.transpose();
      u.wo.noalias() += w_u * d.dlogits * a.h2.transpose();
      p.bo -= eta * d.dlogits;
      u.bo += w_u * d.dlogits;
      p.w2.noalias() -= eta * d.dz2 * a.h1.transpose();
      u.w2.noalias() += w_u * d.dz2 * a.h1.transpose();
      p.b2 -= eta * d.dz2;
      u.b2 += w_u * d.dz2;
      p.w1.noalias() -= eta * d.dz1 * a.x.transpose();
      u.w1.noalias() += w_u * d.dz1 * a.x.transpose();
      p.b1 -= eta * d.dz1;
      u.b1 += w_u * d.dz1;
      for (int i = 0; i < kSequenceLength; ++i) {
        const int id = ex.x[i];
        const int type = static_cast<int>(layout.type[i]);
        if (id == Vocabulary::kNoneId || (type == word_type && model.frozen_words())) continue;
        auto grad = d.dx.segment(layout.offset[i], layout.width[i]).transpose();
        p.embedding[type].row(id) -= eta * grad;
        u.embedding[type].row(id) += w_u * grad;
      }
      ++t;
    }
    if (opt.on_epoch) opt.on_epoch(epoch, averaged(model, u, t), epoch_loss / static_cast<double>(order.size()));
  }
  return averaged(model, u, t);
}

double action_accuracy(const Model& model, const std::vector<Example>& examples) {
  if (examples.empty()) return 0.0;
  const Layout layout(model.dims());
  Activations a;
  std::size_t hits = 0;
  for (const auto& ex : examples) {
    forward(model.params(), layout, ex.x, a);
    Eigen::Index best = 0;
    a.logp.maxCoeff(&best);
    if (best == ex.gold) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(examples.size());
}

// ---- Serialization ----

std::string serialize(const Model& model) {
  Writer w;
  w.raw(kMagic.data(), kMagic.size());
  w.u32(kFormatVersion);
  w.str(model.template_version());
  for (int width : model.dims().width) w.u32(static_cast<std::uint32_t>(width));
  w.u32(static_cast<std::uint32_t>(model.dims().hidden1));
  w.u32(static_cast<std::uint32_t>(model.dims().hidden2));
  w.u32(static_cast<std::uint32_t>(model.actions().size()));
  for (const auto& a : model.actions().actions()) w.str(to_string(a));
  for (const auto& v : model.vocab()) {
    w.u32(static_cast<std::uint32_t>(v.size()));
    for (const auto& item : v.items()) w.str(item);
  }
  const Hyperparams& hp = model.hyperparams();
  w.f64(hp.learning_rate);
  w.f64(hp.decay);
  w.u32(static_cast<std::uint32_t>(hp.epochs));
  w.u32(static_cast<std::uint32_t>(hp.beam));
  w.u64(hp.seed);
  w.u32(model.frozen_words() ? 1 : 0);
  const Parameters& p = model.params();
  for (const auto& e : p.embedding) w.matrix(e);
  w.matrix(p.w1);
  w.matrix(p.b1);
  w.matrix(p.w2);
  w.matrix(p.b2);
  w.matrix(p.wo);
  w.matrix(p.bo);
  w.u32(crc(w.bytes()));
  return std::move(w.bytes());
}

Model deserialize(std::string_view bytes) {
  if (bytes.size() < kMagic.size() + 8 || bytes.substr(0, kMagic.size()) != kMagic)
    throw DataError("not a model file");
  const std::string_view body = bytes.substr(0, bytes.size() - 4);
  std::uint32_t stored;
  std::memcpy(&stored, bytes.data() + body.size(), 4);
  if (crc(body) != stored) throw DataError("model file checksum mismatch (truncated or corrupted)");

  Reader r(body.substr(kMagic.size()));
  const std::uint32_t version = r.u32();
  if (version != kFormatVersion)
    throw DataError("model file format " + std::to_string(version) + " is not supported (expected " +
                    std::to_string(kFormatVersion) + ")");
  const std::string tmpl = r.str();
  if (tmpl != template_version())
    throw DataError("model feature template '" + tmpl + "' does not match '" +
                    std::string(template_version()) + "'");

  Dimensions dims;
  for (int& width : dims.width) width = static_cast<int>(r.u32());
  dims.hidden1 = static_cast<int>(r.u32());
  dims.hidden2 = static_cast<int>(r.u32());
  std::vector<Label> labels;
  const std::uint32_t n_actions = r.u32();
  for (std::uint32_t i = 0; i < n_actions; ++i) {
    Action a = parse_action(r.str());
    if (!a.is_shift()) labels.push_back(a.label);
  }
  Vocabularies vocab;
  for (auto& v : vocab) {
    const std::uint32_t n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) v.add(r.str());
    if (v.size() != static_cast<int>(n)) throw DataError("model vocabulary is malformed");
  }
  Hyperparams hp;
  hp.learning_rate = r.f64();
  hp.decay = r.f64();
  hp.epochs = static_cast<int>(r.u32());
  hp.beam = static_cast<int>(r.u32());
  hp.seed = r.u64();
  const bool frozen = r.u32() != 0;

  Model model(std::move(vocab), ActionSet::from_labels(labels), dims, 0, 0.0);
  if (model.actions().size() != n_actions) throw DataError("model action set is malformed");
  model.set_hyperparams(hp);
  model.set_frozen_words(frozen);
  Parameters& p = model.params();
  auto expect = [](const MatrixXd& got, const MatrixXd& like, std::string_view what) {
    if (got.rows() != like.rows() || got.cols() != like.cols())
      throw DataError("model block " + std::string(what) + " has the wrong shape");
    return got;
  };
  for (int t = 0; t < static_cast<int>(kSymbolTypeCount); ++t)
    p.embedding[t] = expect(r.matrix(), p.embedding[t], Parameters::block_name(t));
  p.w1 = expect(r.matrix(), p.w1, "w1");
  p.b1 = expect(r.matrix(), p.b1, "b1");
  p.w2 = expect(r.matrix(), p.w2, "w2");
  p.b2 = expect(r.matrix(), p.b2, "b2");
  p.wo = expect(r.matrix(), p.wo, "wo");
  p.bo = expect(r.matrix(), p.bo, "bo");
  if (!r.done()) throw DataError("model file has trailing data");
  return model;
}

void save_model(const Model& model, const std::string& path) { text::write_file(path, serialize(model)); }

Model load_model(const std::string& path) { return deserialize(text::read_file(path)); }

std::uint32_t model_checksum(const Model& model) {
  const std::string bytes = serialize(model);
  return crc(std::string_view(bytes).substr(0, bytes.size() - 4));
}

}  // namespace rst
