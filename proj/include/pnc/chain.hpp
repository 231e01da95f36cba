// The n-node regular linear network: frame algebra with an explicit null
// frame, the slot-synchronous forwarding state machine, throughput
// measurement and the synchronization-overhead model.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnc {

/// A fixed-length GF(2) bit vector, or the distinct null frame. The null
/// frame is signaled silence (control plane); the all-zeros frame is
/// ordinary data and is not null.
class Frame {
  public:
    Frame() = default;  // null
    static Frame null() { return Frame{}; }
    static Frame data(std::vector<std::uint8_t> bits);

    bool is_null() const { return null_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }

    friend bool operator==(const Frame&, const Frame&) = default;

  private:
    bool null_ = true;
    std::vector<std::uint8_t> bits_;
};

/// GF(2) addition with null as identity: null ^ F = F, and bitwise XOR of
/// two data frames (equal frames give the all-zeros data frame, not null).
/// Throws on length mismatch of two data frames.
Frame frame_xor(const Frame& a, const Frame& b);

enum class ChainMode { Unidirectional, Bidirectional };

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One row per (slot, node): the node either transmitted or received.
/// Frame identity is the set of source frames XOR-ed together, rendered
/// like "X1", "Y2", "X3+Y1" or "NULL".
struct SlotRecord {
    int slot;
    int node;
    bool transmitted;            // else received
    std::vector<int> frame_tags;   // +l = X_l, -l = Y_l; empty = null
    std::vector<int> buffer_tags;  // buffer content after the slot
};

std::string render_tags(const std::vector<int>& tags);

struct ThroughputReport {
    double forward = 0.0;          // X frames decoded at node n per slot
    double reverse = 0.0;          // Y frames decoded at node 1 per slot
    std::uint64_t forward_frames = 0;
    std::uint64_t reverse_frames = 0;
    int warmup_slots = 0;
    int measured_slots = 0;
};

struct ChainResult {
    std::vector<SlotRecord> trace;
    ThroughputReport throughput;
};

/// Slot-synchronous simulation of the forwarding recursion. Odd nodes
/// transmit in odd slots and even nodes in even slots; end nodes inject
/// source frames in their transmit slots and cancel their own last
/// injection in their receive slots. A node emitting null keeps silence
/// and its neighbors fall back to plain single-sender reception.
class ChainSim {
  public:
    /// x_frames feed node 1, y_frames feed node n; entries may be null
    /// frames (slack). Unidirectional mode ignores y_frames.
    ChainSim(int n, ChainMode mode, std::vector<Frame> x_frames, std::vector<Frame> y_frames);

    /// Advances one slot, appending one record per node to the trace and
    /// verifying the end-node decode identities. Throws ProtocolError with
    /// the offending slot on an identity violation.
    void step_slot();

    int node_count() const { return n_; }
    int slot() const { return slot_; }
    const std::vector<SlotRecord>& trace() const { return trace_; }

    /// Frame currently buffered at node i (1-based), null if cancelled out.
    Frame buffer(int node) const;
    const std::vector<int>& buffer_tags(int node) const;

  private:
    struct Tagged {
        std::vector<int> tags;  // sorted; empty == null
        std::vector<std::uint8_t> bits;
        bool is_null() const { return tags.empty(); }
    };
    static Tagged tag_xor(const Tagged& a, const Tagged& b);

    bool node_transmits(int node, int slot) const;
    Tagged source_frame(bool x_side, int index) const;
    void check_decode_identity(int node, int slot, const Tagged& got) const;

    int n_;
    ChainMode mode_;
    int slot_ = 0;
    std::vector<Frame> x_frames_, y_frames_;
    std::vector<Tagged> buffers_;  // 1-based
    std::vector<SlotRecord> trace_;
};

/// Runs total_slots slots and measures per-direction delivered frames per
/// slot after a warmup window of 2n slots. Requires n >= 3 and
/// total_slots >= 4n.
ChainResult run_chain(int n, ChainMode mode, const std::vector<Frame>& x_frames,
                      const std::vector<Frame>& y_frames, int total_slots);

/// Writes the trace as CSV: slot,node,role,frame,buffer.
void write_trace_csv(std::ostream& out, const std::vector<SlotRecord>& trace);

/// Builds a source list of `count` injections at `rate` frames per slot
/// (rate <= 0.5), inserting null frames for the slack by deterministic
/// largest-remainder interleaving; payloads are seeded random bits.
std::vector<Frame> make_source_frames(int count, double rate, int frame_bits, std::uint64_t seed);

/// Synchronization-budget model: a chain of n nodes is synchronized in
/// basic groups, dt_bg seconds each, once every t_p seconds.
struct SyncBudget {
    int n_nodes;
    double dt_bg;
    double t_p;
};

/// Overhead fraction (n_nodes - 2) * dt_bg / t_p; grows only linearly in
/// the chain length. Throws if the sync phase exceeds the period.
double sync_overhead(const SyncBudget& budget);

}  // namespace pnc
