public class EventQueue {
    private List<String> pendingEvents = new ArrayList<>();

    /** append a pending event to the queue */
    public void appendPendingEvent(String event) {
        pendingEvents.add(event);
    }

    /** drain the pending events and return the drained count */
    public int drainPendingEvents() {
        int drained = pendingEvents.size();
        pendingEvents.clear();
        return drained;
    }
}
