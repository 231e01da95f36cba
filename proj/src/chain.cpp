#include "pnc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

namespace pnc {

Frame Frame::data(std::vector<std::uint8_t> bits) {
    Frame f;
    f.null_ = false;
    f.bits_ = std::move(bits);
    for (auto& b : f.bits_) b &= 1u;
    return f;
}

Frame frame_xor(const Frame& a, const Frame& b) {
    if (a.is_null()) return b;
    if (b.is_null()) return a;
    if (a.size() != b.size()) throw std::invalid_argument("frame length mismatch");
    std::vector<std::uint8_t> bits(a.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a.bits()[i] ^ b.bits()[i];
    return Frame::data(std::move(bits));
}

std::string render_tags(const std::vector<int>& tags) {
    if (tags.empty()) return "NULL";
    std::string out;
    for (int t : tags) {
        if (!out.empty()) out += '+';
        out += (t > 0 ? "X" + std::to_string(t) : "Y" + std::to_string(-t));
    }
    return out;
}

ChainSim::Tagged ChainSim::tag_xor(const Tagged& a, const Tagged& b) {
    if (a.is_null()) return b;
    if (b.is_null()) return a;
    Tagged out;
    std::set_symmetric_difference(a.tags.begin(), a.tags.end(), b.tags.begin(), b.tags.end(),
                                  std::back_inserter(out.tags));
    if (out.tags.empty()) return out;  // full cancellation: signaled silence
    if (a.bits.size() != b.bits.size()) throw ProtocolError("frame length mismatch in chain");
    out.bits.resize(a.bits.size());
    for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = a.bits[i] ^ b.bits[i];
    return out;
}

ChainSim::ChainSim(int n, ChainMode mode, std::vector<Frame> x_frames, std::vector<Frame> y_frames)
    : n_(n), mode_(mode), x_frames_(std::move(x_frames)),
      y_frames_(mode == ChainMode::Unidirectional ? std::vector<Frame>{} : std::move(y_frames)),
      buffers_(static_cast<std::size_t>(n) + 1) {
    if (n < 3) throw std::invalid_argument("chain needs at least 3 nodes");
}

bool ChainSim::node_transmits(int node, int slot) const {
    return (node % 2) == (slot % 2);  // odd nodes in odd slots, even in even
}

ChainSim::Tagged ChainSim::source_frame(bool x_side, int index) const {
    Tagged t;
    if (index < 1) return t;
    const auto& list = x_side ? x_frames_ : y_frames_;
    if (static_cast<std::size_t>(index) > list.size()) return t;  // exhausted: slack
    const Frame& f = list[index - 1];
    if (f.is_null()) return t;
    t.tags = {x_side ? index : -index};
    t.bits = f.bits();
    return t;
}

void ChainSim::check_decode_identity(int node, int slot, const Tagged& got) const {
    // B_1[j] = Y_(j-n+3)/2 and B_n[j] = X_(j-n+3)/2 on the end nodes'
    // receive slots (index shifted by one when n is even and the schedule
    // parity mirrors).
    const bool x_side = (node != 1);
    int num = slot - n_ + 3;
    if (node == 1 && n_ % 2 == 0) num = slot - n_ + 2;
    const int index = num / 2;
    Tagged expect = source_frame(x_side, index);
    if (got.tags != expect.tags || got.bits != expect.bits)
        throw ProtocolError("decode identity violated at node " + std::to_string(node) +
                            ", slot " + std::to_string(slot) + ": got " + render_tags(got.tags) +
                            ", expected " + render_tags(expect.tags));
}

void ChainSim::step_slot() {
    const int j = ++slot_;
    std::vector<Tagged> sent(static_cast<std::size_t>(n_) + 2);  // padded, null ends

    // Transmitting nodes first update their buffers, then send them.
    for (int i = 1; i <= n_; ++i) {
        if (!node_transmits(i, j)) continue;
        if (i == 1) {
            buffers_[1] = tag_xor(source_frame(true, (j + 1) / 2), buffers_[1]);
        } else if (i == n_) {
            const int l = (n_ % 2 == 1) ? (j + 1) / 2 : j / 2;
            buffers_[n_] = tag_xor(source_frame(false, l), buffers_[n_]);
        }
        sent[i] = buffers_[i];
    }

    // Receiving nodes see the superposition of their neighbors (silent
    // neighbors contribute nothing) and cancel what they already hold.
    for (int i = 1; i <= n_; ++i) {
        if (node_transmits(i, j)) continue;
        const Tagged received = tag_xor(sent[i - 1], sent[i + 1]);
        if (i == 1) {
            buffers_[1] = tag_xor(source_frame(true, j / 2), received);
            check_decode_identity(1, j, buffers_[1]);
        } else if (i == n_) {
            const int l = (n_ % 2 == 1) ? j / 2 : (j - 1) / 2;
            buffers_[n_] = tag_xor(source_frame(false, l), received);
            check_decode_identity(n_, j, buffers_[n_]);
        } else {
            buffers_[i] = tag_xor(buffers_[i], received);
        }
        trace_.push_back({j, i, false, received.tags, buffers_[i].tags});
    }
    for (int i = 1; i <= n_; ++i)
        if (node_transmits(i, j)) trace_.push_back({j, i, true, sent[i].tags, buffers_[i].tags});
    std::sort(trace_.end() - n_, trace_.end(),
              [](const SlotRecord& a, const SlotRecord& b) { return a.node < b.node; });
}

Frame ChainSim::buffer(int node) const {
    const Tagged& t = buffers_.at(node);
    return t.is_null() ? Frame::null() : Frame::data(t.bits);
}

const std::vector<int>& ChainSim::buffer_tags(int node) const { return buffers_.at(node).tags; }

ChainResult run_chain(int n, ChainMode mode, const std::vector<Frame>& x_frames,
                      const std::vector<Frame>& y_frames, int total_slots) {
    if (n < 3) throw std::invalid_argument("chain needs at least 3 nodes");
    if (total_slots < 4 * n) throw std::invalid_argument("need at least 4n slots");

    ChainSim sim(n, mode, x_frames, y_frames);
    for (int j = 0; j < total_slots; ++j) sim.step_slot();

    ChainResult result;
    result.trace = sim.trace();
    auto& tp = result.throughput;
    tp.warmup_slots = 2 * n;
    tp.measured_slots = total_slots - tp.warmup_slots;
    for (const auto& rec : result.trace) {
        if (rec.slot <= tp.warmup_slots || rec.transmitted) continue;
        // A decoded source frame shows up as a singleton buffer on an end
        // node right after its receive slot.
        if (rec.node == n && rec.buffer_tags.size() == 1 && rec.buffer_tags[0] > 0)
            ++tp.forward_frames;
        if (rec.node == 1 && rec.buffer_tags.size() == 1 && rec.buffer_tags[0] < 0)
            ++tp.reverse_frames;
    }
    tp.forward = static_cast<double>(tp.forward_frames) / tp.measured_slots;
    tp.reverse = static_cast<double>(tp.reverse_frames) / tp.measured_slots;
    return result;
}

void write_trace_csv(std::ostream& out, const std::vector<SlotRecord>& trace) {
    out << "slot,node,role,frame,buffer\n";
    for (const auto& r : trace)
        out << r.slot << ',' << r.node << ',' << (r.transmitted ? "tx" : "rx") << ','
            << render_tags(r.frame_tags) << ',' << render_tags(r.buffer_tags) << '\n';
}

std::vector<Frame> make_source_frames(int count, double rate, int frame_bits, std::uint64_t seed) {
    if (!(rate >= 0.0 && rate <= 0.5)) throw std::invalid_argument("rate must lie in [0, 0.5]");
    if (frame_bits < 1) throw std::invalid_argument("frame_bits must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Frame> out;
    out.reserve(count);
    // One injection opportunity every two slots; emit so that floor counts
    // track 2*rate*k (largest-remainder interleaving of null slack).
    long long emitted = 0;
    for (int k = 1; k <= count; ++k) {
        const long long want = static_cast<long long>(std::floor(2.0 * rate * k + 1e-9));
        if (want > emitted) {
            ++emitted;
            std::vector<std::uint8_t> bits(frame_bits);
            for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
            out.push_back(Frame::data(std::move(bits)));
        } else {
            out.push_back(Frame::null());
        }
    }
    return out;
}

double sync_overhead(const SyncBudget& budget) {
    if (budget.n_nodes < 3) throw std::domain_error("chain needs at least 3 nodes");
    if (!(budget.dt_bg >= 0.0) || !(budget.t_p > 0.0))
        throw std::domain_error("sync times must be nonnegative with a positive period");
    const double t_s = (budget.n_nodes - 2) * budget.dt_bg;
    if (t_s > budget.t_p) throw std::domain_error("sync phase exceeds the resync period");
    return t_s / budget.t_p;
}

}  // namespace pnc
