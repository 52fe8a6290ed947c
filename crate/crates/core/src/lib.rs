pub mod families;
pub mod identities;
pub mod json;
pub mod moments;
pub mod mpoly;
pub mod oracle;
pub mod qfield;
