namespace spt {}
