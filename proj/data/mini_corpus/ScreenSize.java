public class ScreenSize {
    private int screenWidth;
    private int screenHeight;

    /** creates the resolution editor group for the screen size */
    public void createResolutionEditor(Composite control, IUpdatableControl updatable) {
        screenSizeGroup = new Group(control, SWT.NONE);
        screenSizeGroup.setText("Screen Size");
        screenSizeGroup.setLayoutData(new GridData(GridData.FILL_HORIZONTAL));
    }

    // get the screen width in pixels
    public int getScreenWidth() {
        return screenWidth;
    }
}
