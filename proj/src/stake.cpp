// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/stake.hpp"

#include <algorithm>

namespace unity {

Amount StakeLedger::Account::locked_total() const {
    Amount sum = 0;
    for (const auto& e : locked) sum += e.amount;
    return sum;
}

Amount StakeLedger::Account::pending_total() const {
    Amount sum = 0;
    for (const auto& e : pending) sum += e.amount;
    return sum;
}

void StakeLedger::deposit(const std::string& account, Amount amount) {
    accounts_[account].liquid += amount;
}

void StakeLedger::lock_initial(const std::string& account, Amount amount) {
    if (amount == 0) return;
    accounts_[account].locked.push_back({amount, 0});
    total_locked_ += amount;
}

bool StakeLedger::lock_stake(const std::string& account, Amount amount, std::uint64_t height) {
    if (amount == 0) return false;
    auto it = accounts_.find(account);
    if (it == accounts_.end() || it->second.liquid < amount) return false;
    it->second.liquid -= amount;
    it->second.locked.push_back({amount, height + 1});
    total_locked_ += amount;
    return true;
}

bool StakeLedger::unlock_stake(const std::string& account, Amount amount, std::uint64_t height,
                               std::uint64_t unlock_delay) {
    if (amount == 0) return false;
    auto it = accounts_.find(account);
    if (it == accounts_.end() || it->second.locked_total() < amount) return false;

    Amount remaining = amount;
    auto& locked = it->second.locked;
    while (remaining > 0) {
        LockEntry& last = locked.back();
        const Amount take = std::min(last.amount, remaining);
        last.amount -= take;
        remaining -= take;
        if (last.amount == 0) locked.pop_back();
    }
    it->second.pending.push_back({amount, height + unlock_delay});
    total_locked_ -= amount;
    return true;
}

void StakeLedger::release_pending(const std::string& account, std::uint64_t height) {
    auto it = accounts_.find(account);
    if (it == accounts_.end()) return;
    auto& pending = it->second.pending;
    Amount released = 0;
    pending.erase(std::remove_if(pending.begin(), pending.end(),
                                 [&](const PendingUnlock& p) {
                                     if (p.release_height <= height) {
                                         released += p.amount;
                                         return true;
                                     }
                                     return false;
                                 }),
                  pending.end());
    it->second.liquid += released;
}

void StakeLedger::release_pending_all(std::uint64_t height) {
    for (auto& [name, acct] : accounts_) {
        (void)acct;
        release_pending(name, height);
    }
}

Amount StakeLedger::effective_stake(const std::string& account, std::uint64_t height) const {
    auto it = accounts_.find(account);
    if (it == accounts_.end()) return 0;
    Amount sum = 0;
    for (const auto& e : it->second.locked)
        if (e.active_from <= height) sum += e.amount;
    return sum;
}

Amount StakeLedger::liquid_of(const std::string& account) const {
    auto it = accounts_.find(account);
    return it == accounts_.end() ? 0 : it->second.liquid;
}

Amount StakeLedger::locked_of(const std::string& account) const {
    auto it = accounts_.find(account);
    return it == accounts_.end() ? 0 : it->second.locked_total();
}

Amount StakeLedger::pending_of(const std::string& account) const {
    auto it = accounts_.find(account);
    return it == accounts_.end() ? 0 : it->second.pending_total();
}

Amount StakeLedger::account_total(const std::string& account) const {
    auto it = accounts_.find(account);
    return it == accounts_.end() ? 0 : it->second.total();
}

} // namespace unity
