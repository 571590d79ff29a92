use std::fmt;
use std::ops::{Add, Mul};

/// A valuation: a nonnegative integer or infinity (the valuation of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }
}

impl Add for Order {
    type Output = Order;

    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinite,
        }
    }
}

/// `k * order` with the convention `0 * inf = 0` (the monomial `x^0` is 1).
impl Mul<Order> for u64 {
    type Output = Order;

    fn mul(self, rhs: Order) -> Order {
        match rhs {
            _ if self == 0 => Order::Finite(0),
            Order::Finite(n) => Order::Finite(self * n),
            Order::Infinite => Order::Infinite,
        }
    }
}

impl From<u64> for Order {
    fn from(n: u64) -> Self {
        Order::Finite(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}
