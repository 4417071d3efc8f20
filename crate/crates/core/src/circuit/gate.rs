use std::fmt;

/// One gate of the oracle. Controls index the address register, targets the data register.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    Cnot { control: usize, target: usize },
    X { target: usize },
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn x(target: usize) -> Self {
        Gate::X { target }
    }

    pub fn control(&self) -> Option<usize> {
        match *self {
            Gate::Cnot { control, .. } => Some(control),
            Gate::X { .. } => None,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Gate::Cnot { target, .. } | Gate::X { target } => target,
        }
    }

    pub fn is_cnot(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Gate::Cnot { .. } => "CNOT",
            Gate::X { .. } => "X",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "CNOT x{control} d{target}"),
            Gate::X { target } => write!(f, "X d{target}"),
        }
    }
}
