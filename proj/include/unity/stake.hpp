// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_STAKE_HPP
#define UNITY_STAKE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace unity {

/// Stake amounts are integral so balance accounting is exact.
using Amount = std::uint64_t;

/// Per-account stake book. Locking takes effect for blocks after the lock
/// height; unlocking removes the stake from voting power immediately but
/// the funds only become liquid again after the configured delay.
class StakeLedger {
public:
    struct LockEntry {
        Amount amount = 0;
        std::uint64_t active_from = 0;  // first height the stake votes at
    };
    struct PendingUnlock {
        Amount amount = 0;
        std::uint64_t release_height = 0;
    };
    struct Account {
        Amount liquid = 0;
        std::vector<LockEntry> locked;
        std::vector<PendingUnlock> pending;

        Amount locked_total() const;
        Amount pending_total() const;
        Amount total() const { return liquid + locked_total() + pending_total(); }
    };

    void deposit(const std::string& account, Amount amount);

    /// Genesis allocation: locked stake that votes from height 0 onward.
    void lock_initial(const std::string& account, Amount amount);

    /// Lock liquid stake at the given height; votes from height+1 onward.
    /// Returns false (ledger unchanged) if amount is zero or exceeds the
    /// liquid balance.
    bool lock_stake(const std::string& account, Amount amount, std::uint64_t height);

    /// Unlock locked stake at the given height. The stake stops voting at
    /// once; the funds are released to liquid at height + unlock_delay.
    /// Returns false (ledger unchanged) if amount is zero or exceeds the
    /// locked balance. Consumes the newest lock entries first.
    bool unlock_stake(const std::string& account, Amount amount, std::uint64_t height,
                      std::uint64_t unlock_delay);

    /// Move every pending unlock with release_height <= height to liquid.
    void release_pending(const std::string& account, std::uint64_t height);
    void release_pending_all(std::uint64_t height);

    /// Locked stake of the account that votes at the given height.
    /// Unknown accounts have zero stake.
    Amount effective_stake(const std::string& account, std::uint64_t height) const;

    Amount liquid_of(const std::string& account) const;
    Amount locked_of(const std::string& account) const;
    Amount pending_of(const std::string& account) const;
    Amount account_total(const std::string& account) const;

    /// Cached sum of all accounts' locked amounts.
    Amount total_locked() const { return total_locked_; }

    const std::map<std::string, Account>& accounts() const { return accounts_; }

private:
    std::map<std::string, Account> accounts_;
    Amount total_locked_ = 0;
};

} // namespace unity

#endif // UNITY_STAKE_HPP
