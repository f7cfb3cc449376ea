use std::fmt;

/// Which matrix of indeterminates a variable belongs to.
///
/// The declaration order fixes the global variable order: X before Y
/// before U before UBar, row-major within each kind.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    X,
    Y,
    U,
    UBar,
}

impl VarKind {
    pub fn token(self) -> &'static str {
        match self {
            VarKind::X => "x",
            VarKind::Y => "y",
            VarKind::U => "u",
            VarKind::UBar => "ubar",
        }
    }
}

/// A matrix-indexed indeterminate, e.g. `y[2][3]`. Indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    pub kind: VarKind,
    pub row: u16,
    pub col: u16,
}

impl Variable {
    pub fn new(kind: VarKind, row: u16, col: u16) -> Self {
        assert!(row >= 1 && col >= 1, "variable indices are 1-based");
        Variable { kind, row, col }
    }

    pub fn x(row: u16, col: u16) -> Self {
        Self::new(VarKind::X, row, col)
    }

    pub fn y(row: u16, col: u16) -> Self {
        Self::new(VarKind::Y, row, col)
    }

    pub fn u(row: u16, col: u16) -> Self {
        Self::new(VarKind::U, row, col)
    }

    pub fn ubar(row: u16, col: u16) -> Self {
        Self::new(VarKind::UBar, row, col)
    }

    /// Row-1 alias `a_i = y[1][i]`.
    pub fn a(col: u16) -> Self {
        Self::y(1, col)
    }

    /// Row-2 alias `b_i = y[2][i]`.
    pub fn b(col: u16) -> Self {
        Self::y(2, col)
    }

    pub fn is_u_side(&self) -> bool {
        matches!(self.kind, VarKind::U | VarKind::UBar)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}][{}]", self.kind.token(), self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order_is_kind_then_row_major() {
        let order = [
            Variable::x(1, 1),
            Variable::x(1, 2),
            Variable::x(2, 1),
            Variable::y(1, 1),
            Variable::y(1, 3),
            Variable::y(2, 1),
            Variable::u(1, 1),
            Variable::ubar(1, 1),
        ];
        for pair in order.windows(2) {
            assert!(pair[0] < pair[1], "{} !< {}", pair[0], pair[1]);
        }
    }

    #[test]
    fn aliases_are_y_rows() {
        assert_eq!(Variable::a(3), Variable::y(1, 3));
        assert_eq!(Variable::b(1), Variable::y(2, 1));
    }
}
