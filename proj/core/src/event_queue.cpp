#include "redsim/event_queue.hpp"

#include <stdexcept>

namespace redsim {

EventQueue::EventQueue(std::size_t node_count) : position_(node_count, npos) {
    heap_.reserve(node_count);
}

bool EventQueue::before(const Event& a, const Event& b) const {
    if (a.t_hat != b.t_hat)
        return a.t_hat < b.t_hat;
    return a.seq < b.seq;
}

void EventQueue::place(std::size_t i, const Event& e) {
    heap_[i] = e;
    position_[e.agent] = i;
}

void EventQueue::sift_up(std::size_t i) {
    const Event e = heap_[i];
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (!before(e, heap_[parent]))
            break;
        place(i, heap_[parent]);
        i = parent;
    }
    place(i, e);
}

void EventQueue::sift_down(std::size_t i) {
    const Event e = heap_[i];
    const std::size_t n = heap_.size();
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= n)
            break;
        if (child + 1 < n && before(heap_[child + 1], heap_[child]))
            ++child;
        if (!before(heap_[child], e))
            break;
        place(i, heap_[child]);
        i = child;
    }
    place(i, e);
}

void EventQueue::push(NodeId agent, double mu_hat, double t_hat) {
    if (position_[agent] != npos)
        throw std::logic_error("EventQueue: agent already has a pending event");
    heap_.push_back(Event{agent, mu_hat, t_hat, next_seq_++});
    position_[agent] = heap_.size() - 1;
    sift_up(heap_.size() - 1);
}

Event EventQueue::pop() {
    if (heap_.empty())
        throw std::logic_error("EventQueue: pop from empty queue");
    const Event top = heap_.front();
    position_[top.agent] = npos;
    const Event last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        place(0, last);
        sift_down(0);
    }
    return top;
}

const Event& EventQueue::peek() const {
    if (heap_.empty())
        throw std::logic_error("EventQueue: peek at empty queue");
    return heap_.front();
}

bool EventQueue::contains(NodeId agent) const { return position_[agent] != npos; }

bool EventQueue::remove(NodeId agent) {
    const std::size_t i = position_[agent];
    if (i == npos)
        return false;
    position_[agent] = npos;
    const Event last = heap_.back();
    heap_.pop_back();
    if (i < heap_.size()) {
        place(i, last);
        sift_down(i);
        sift_up(position_[last.agent]);
    }
    return true;
}

} // namespace redsim
