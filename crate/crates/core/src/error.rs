use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible conductors: value of conductor {value} is not in Q(zeta_{ambient})")]
    IncompatibleConductor { value: u32, ambient: u32 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field is not contained in the ambient field: {0}")]
    NotSubfield(String),
    #[error("value lies outside the field: {0}")]
    ValueOutsideField(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("group order {order} exceeds the cap of {cap}")]
    SizeCap { order: usize, cap: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a normal subgroup: {0}")]
    NotNormal(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("homomorphism is not surjective: {0}")]
    NotSurjective(String),
    #[error("homomorphism is not injective: {0}")]
    NotInjective(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("class functions live on different groups")]
    ClassMismatch,
    #[error("character is not irreducible (<chi,chi> = {0})")]
    Reducible(String),
    #[error("group algebra element is not central")]
    NotCentral,
    #[error("character is not defined on the kernel: {0}")]
    NotOnKernel(String),

    #[error("pair is not semi-invariant over the given field")]
    NotSemiInvariant,
    #[error("Galois action maps differ: {0}")]
    ActionMismatch(String),
    #[error("kernel is not abelian")]
    KernelNotAbelian,
    #[error("certification failed: {0}")]
    Certification(String),
}

impl Error {
    /// Errors caused by malformed input data rather than by a violated
    /// mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGroup(_) | Error::MalformedPermutation(_) | Error::InvalidField(_)
        )
    }
}
