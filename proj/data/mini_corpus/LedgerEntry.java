public class LedgerEntry {
    private long entryAmount;
    private String entryLabel;

    // set the entry label shown in the ledger
    public void setEntryLabel(String label) {
        entryLabel = label;
    }

    // get the entry amount recorded in the ledger
    public long getEntryAmount() {
        return entryAmount;
    }
}
